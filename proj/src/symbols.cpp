#include "ssk/symbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssk {

SymbolSeq::SymbolSeq(std::vector<Symbol> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  for (Symbol c : symbols_) {
    if (c >= alphabet_size_) {
      throw std::invalid_argument("symbol id " + std::to_string(c) +
                                  " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
    }
  }
}

SymbolSeq SymbolSeq::from_bytes(std::string_view text) {
  std::vector<Symbol> symbols(text.size());
  std::transform(text.begin(), text.end(), symbols.begin(),
                 [](char c) { return static_cast<Symbol>(static_cast<unsigned char>(c)); });
  return SymbolSeq(std::move(symbols), 256);
}

SymbolSeq SymbolSeq::prefix(std::size_t len) const {
  len = std::min(len, symbols_.size());
  SymbolSeq out;
  out.symbols_.assign(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(len));
  out.alphabet_size_ = alphabet_size_;
  return out;
}

Symbol SymbolTable::intern(std::string_view token) {
  auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<Symbol>(tokens_.size()));
  if (inserted) tokens_.emplace_back(token);
  return it->second;
}

Symbol SymbolTable::id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) throw std::out_of_range("unknown token");
  return it->second;
}

bool SymbolTable::contains(std::string_view token) const {
  return ids_.find(std::string(token)) != ids_.end();
}

namespace {

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 1;  // stray continuation or invalid byte: keep it as its own token
}

bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_punct(unsigned char c) {
  return (c >= 33 && c <= 47) || (c >= 58 && c <= 64) || (c >= 91 && c <= 96) ||
         (c >= 123 && c <= 126);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, TokenMode mode) {
  std::vector<std::string> tokens;
  if (mode == TokenMode::character) {
    for (std::size_t pos = 0; pos < text.size();) {
      const std::size_t len =
          std::min(utf8_length(static_cast<unsigned char>(text[pos])), text.size() - pos);
      tokens.emplace_back(text.substr(pos, len));
      pos += len;
    }
    return tokens;
  }

  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_ascii_space(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (!is_ascii_punct(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

EncodedTexts encode_texts(std::span<const std::string> texts, TokenMode mode) {
  EncodedTexts out;
  std::vector<std::vector<Symbol>> raw;
  raw.reserve(texts.size());
  for (const auto& text : texts) {
    std::vector<Symbol> ids;
    for (const auto& token : tokenize(text, mode)) ids.push_back(out.alphabet.intern(token));
    raw.push_back(std::move(ids));
  }
  out.seqs.reserve(raw.size());
  for (auto& ids : raw) out.seqs.emplace_back(std::move(ids), out.alphabet.size());
  return out;
}

OccurrenceIndex build_occurrence_index(const SymbolSeq& s, std::size_t alphabet_size) {
  OccurrenceIndex index(alphabet_size);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Symbol c = s[i];
    if (c >= alphabet_size) throw std::invalid_argument("symbol outside occurrence alphabet");
    index[c].push_back(static_cast<std::uint32_t>(i + 1));
  }
  return index;
}

}  // namespace ssk
