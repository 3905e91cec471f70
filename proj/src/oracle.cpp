#include "biaut/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "biaut/error.hpp"
#include "biaut/format.hpp"

namespace biaut {

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const Word& w : out)
      for (char c : alphabet.symbols()) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

void check_enumeration_guard(const Alphabet& alphabet, std::size_t bound) {
  std::size_t total = 0, power = 1;
  for (std::size_t n = 0; n <= bound; ++n) {
    total += power;
    if (total > kMaxEnumeratedWords)
      throw CapError("enumeration up to length " + std::to_string(bound) + " exceeds " +
                     std::to_string(kMaxEnumeratedWords) + " words");
    power *= alphabet.size();
  }
}

bool WordTable::contains(std::string_view w) const {
  if (w.size() > bound) return false;
  const auto& row = accepted[w.size()];
  return std::binary_search(row.begin(), row.end(), w,
                            [&](std::string_view x, std::string_view y) { return lex_less(alphabet, x, y); });
}

std::size_t WordTable::size() const {
  std::size_t total = 0;
  for (const auto& row : accepted) total += row.size();
  return total;
}

std::vector<Word> WordTable::words() const {
  std::vector<Word> out;
  for (const auto& row : accepted) out.insert(out.end(), row.begin(), row.end());
  return out;
}

WordTable enumerate(const Alphabet& alphabet, std::size_t bound, const std::function<bool(std::string_view)>& member) {
  check_enumeration_guard(alphabet, bound);
  WordTable t{alphabet, bound, {}};
  for (std::size_t n = 0; n <= bound; ++n) {
    t.accepted.emplace_back();
    for (Word& w : all_words(alphabet, n))
      if (member(w)) t.accepted.back().push_back(std::move(w));
  }
  return t;
}

WordTable enumerate(const Dfa& dfa, std::size_t bound) {
  return enumerate(dfa.alphabet(), bound, [&](std::string_view w) { return accepts(dfa, w); });
}

WordTable enumerate(const Bia& bia, std::size_t bound) {
  return enumerate(bia.alphabet(), bound, [&](std::string_view w) { return accepts(bia, w); });
}

TableComparison tables_equal(const WordTable& first, const WordTable& second) {
  if (first.bound != second.bound) throw PreconditionError("word tables have different bounds");
  if (!(first.alphabet == second.alphabet)) throw PreconditionError("word tables have different alphabets");
  for (std::size_t n = 0; n <= first.bound; ++n) {
    const auto& a = first.accepted[n];
    const auto& b = second.accepted[n];
    // Rows are in the same (alphabet) order, so a merge finds the first
    // difference.
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (i < a.size() && j < b.size() && a[i] == b[j]) {
        ++i, ++j;
        continue;
      }
      bool take_a = j == b.size() || (i < a.size() && lex_less(first.alphabet, a[i], b[j]));
      return {false, take_a ? a[i] : b[j], take_a};
    }
  }
  return {};
}

BoundedPairVerdict fix_free_up_to(const WordTable& table, FixKind kind) {
  std::unordered_set<Word> members;
  for (const auto& row : table.accepted) members.insert(row.begin(), row.end());
  BoundedPairVerdict out;
  out.bound = table.bound;
  for (std::size_t n = 1; n <= table.bound; ++n)
    for (const Word& w : table.accepted[n]) {
      std::optional<Word> best;
      // Keep w[0, i) and the last j symbols, deleting a non-empty factor.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) {
          if (kind == FixKind::prefix && j != 0) continue;
          if (kind == FixKind::suffix && i != 0) continue;
          Word v = w.substr(0, i) + w.substr(n - j);
          if (!members.contains(v)) continue;
          if (!best || v.size() < best->size() || (v.size() == best->size() && lex_less(table.alphabet, v, *best)))
            best = std::move(v);
        }
      if (best) {
        out.holds = false;
        out.pair = std::pair{w, *best};
        return out;
      }
    }
  return out;
}

std::optional<std::size_t> definite_up_to(const WordTable& table, std::size_t k_max) {
  if (table.bound < k_max + 2)
    throw PreconditionError("table bound " + std::to_string(table.bound) + " is below k_max + 2");
  for (std::size_t k = 0; k <= k_max; ++k) {
    std::map<Word, bool> by_suffix;
    bool consistent = true;
    for (std::size_t n = k; n <= table.bound && consistent; ++n)
      for (const Word& w : all_words(table.alphabet, n)) {
        bool in = table.contains(w);
        auto [it, fresh] = by_suffix.emplace(w.substr(n - k), in);
        if (!fresh && it->second != in) {
          consistent = false;
          break;
        }
      }
    if (consistent) return k;
  }
  return std::nullopt;
}

std::string dump_table(const WordTable& table) {
  std::string out = "# bound: " + std::to_string(table.bound) + "\n";
  for (const auto& row : table.accepted)
    for (const Word& w : row) out += "+" + show_word(w) + "\n";
  return out;
}

}  // namespace biaut
