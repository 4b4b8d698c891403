#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ssk {

using Symbol = std::uint32_t;

/// A string as integer symbol ids over an alphabet of a declared size.
class SymbolSeq {
 public:
  SymbolSeq() = default;
  /// Throws std::invalid_argument if any symbol is >= alphabet_size.
  SymbolSeq(std::vector<Symbol> symbols, std::size_t alphabet_size);
  SymbolSeq(std::initializer_list<Symbol> symbols, std::size_t alphabet_size)
      : SymbolSeq(std::vector<Symbol>(symbols), alphabet_size) {}

  /// Encodes each byte of `text` against a byte alphabet (size 256).
  static SymbolSeq from_bytes(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
  [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// 1-based access, matching the positions used in match lists.
  [[nodiscard]] Symbol at(std::size_t pos) const { return symbols_.at(pos - 1); }
  [[nodiscard]] Symbol operator[](std::size_t index) const noexcept { return symbols_[index]; }

  /// First `len` symbols, same alphabet.
  [[nodiscard]] SymbolSeq prefix(std::size_t len) const;

  friend bool operator==(const SymbolSeq&, const SymbolSeq&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_size_ = 0;
};

enum class TokenMode { character, word };

/// Token <-> symbol id mapping built in order of first appearance.
class SymbolTable {
 public:
  Symbol intern(std::string_view token);
  [[nodiscard]] std::size_t size() const noexcept { return tokens_.size(); }
  [[nodiscard]] const std::string& token(Symbol id) const { return tokens_.at(id); }
  /// Throws std::out_of_range for unknown tokens.
  [[nodiscard]] Symbol id(std::string_view token) const;
  [[nodiscard]] bool contains(std::string_view token) const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Symbol> ids_;
};

/// Splits text into tokens. Character mode yields one token per UTF-8 code
/// point. Word mode lowercases ASCII letters, drops ASCII punctuation and
/// splits on whitespace.
std::vector<std::string> tokenize(std::string_view text, TokenMode mode);

struct EncodedTexts {
  SymbolTable alphabet;
  std::vector<SymbolSeq> seqs;
};

/// Encodes all texts against one shared alphabet.
EncodedTexts encode_texts(std::span<const std::string> texts, TokenMode mode);

/// For each symbol c < alphabet_size, the ascending 1-based positions of c in s.
using OccurrenceIndex = std::vector<std::vector<std::uint32_t>>;
OccurrenceIndex build_occurrence_index(const SymbolSeq& s, std::size_t alphabet_size);

}  // namespace ssk
