#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ssk/bench.hpp"

namespace ssk::bench {
namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string num(double v) {
  if (std::isnan(v)) return {};
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

}  // namespace

std::string csv_header_corpus(const CorpusConfig& config) {
  std::ostringstream os;
  os << "# schema=" << kCorpusSchema
     << "; mode=" << (config.mode == TokenMode::word ? "word" : "character")
     << "; g_max=" << config.base.g_max << "; warmup=" << config.base.warmup << '\n';
  os << "doc_s,doc_t,len_s,len_t,mean_size,alphabet_size,match_list_size,"
        "inverse_match_frequency,algorithm,p,lambda,repetition,elapsed_ns,kernel_value_log,"
        "status\n";
  return os.str();
}

std::string csv_row(const CorpusRecord& r) {
  std::ostringstream os;
  const bool paired = r.status != Status::unreadable && r.status != Status::unpaired;
  os << csv_escape(r.doc_s) << ',' << csv_escape(r.doc_t) << ',';
  if (paired) {
    os << r.len_s << ',' << r.len_t << ',' << num(r.mean_size) << ',' << r.alphabet_size << ','
       << r.match_list_size << ',' << num(r.inverse_match_frequency) << ',';
  } else {
    os << ",,,,,,";
  }
  os << (r.algorithm ? to_string(*r.algorithm) : "") << ',';
  if (r.algorithm) {
    os << r.p << ',' << num(r.lambda) << ',' << r.repetition << ',' << r.elapsed_ns << ',';
  } else {
    os << ",,,,";
  }
  os << format_log(r.kernel_value_log) << ',' << to_string(r.status) << '\n';
  return os.str();
}

std::vector<CorpusRecord> bench_corpus(const CorpusConfig& config, std::ostream& csv) {
  config.base.validate();
  if (config.p_list.empty()) throw std::invalid_argument("empty p list");
  for (std::size_t p : config.p_list) KernelParams(p, config.base.lambda);
  if (!std::filesystem::is_directory(config.directory)) {
    throw std::invalid_argument("not a directory: " + config.directory.string());
  }

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(config.directory)) {
    if (!entry.is_directory()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CorpusRecord> out;
  csv << csv_header_corpus(config);
  auto emit = [&](const CorpusRecord& r) {
    csv << csv_row(r);
    out.push_back(r);
  };

  std::vector<std::string> names;
  std::vector<std::string> texts;
  for (const auto& path : files) {
    auto text = read_file(path);
    if (!text) {
      CorpusRecord r;
      r.doc_s = path.filename().string();
      r.kernel_value_log = kMissing;
      r.status = Status::unreadable;
      emit(r);
      continue;
    }
    names.push_back(path.filename().string());
    texts.push_back(std::move(*text));
  }

  const EncodedTexts enc = encode_texts(texts, config.mode);
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return enc.seqs[a].size() < enc.seqs[b].size();
  });

  const ComputeOptions options = config.base.compute_options();
  for (std::size_t k = 0; k + 1 < order.size(); k += 2) {
    const SymbolSeq& s = enc.seqs[order[k]];
    const SymbolSeq& t = enc.seqs[order[k + 1]];
    CorpusRecord base;
    base.doc_s = names[order[k]];
    base.doc_t = names[order[k + 1]];
    base.len_s = s.size();
    base.len_t = t.size();
    base.mean_size = 0.5 * static_cast<double>(s.size() + t.size());
    base.alphabet_size = enc.alphabet.size();
    base.match_list_size = match_count(s, t);
    base.inverse_match_frequency =
        base.match_list_size == 0
            ? std::numeric_limits<double>::infinity()
            : static_cast<double>(s.size()) * static_cast<double>(t.size()) /
                  static_cast<double>(base.match_list_size);
    base.lambda = config.base.lambda;
    for (Algorithm a : config.base.algorithms) {
      for (std::size_t p : config.p_list) {
        const KernelParams params(p, config.base.lambda);
        Status failed = Status::ok;
        for (std::size_t w = 0; w < config.base.warmup && failed == Status::ok; ++w) {
          failed = timed_run(a, s, t, params, options).status;
        }
        for (std::size_t rep = 0; rep < config.base.repetitions; ++rep) {
          CorpusRecord r = base;
          r.algorithm = a;
          r.p = p;
          r.repetition = rep;
          r.kernel_value_log = kMissing;
          r.status = failed;
          if (failed == Status::ok) {
            const Timed run = timed_run(a, s, t, params, options);
            r.status = run.status;
            r.elapsed_ns = run.elapsed_ns;
            if (run.value) r.kernel_value_log = run.value->level(p).log();
            failed = run.status;
          }
          emit(r);
        }
      }
    }
  }
  if (order.size() % 2 == 1) {
    CorpusRecord r;
    r.doc_s = names[order.back()];
    r.kernel_value_log = kMissing;
    r.status = Status::unpaired;
    emit(r);
  }
  csv.flush();
  return out;
}

}  // namespace ssk::bench
