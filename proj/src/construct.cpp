#include "biaut/construct.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "biaut/error.hpp"

namespace biaut {

CrossProduct cross_product(const Dfa& language, const Dfa& reversed) {
  if (!(language.alphabet() == reversed.alphabet()))
    throw AlphabetError("cross product needs a shared alphabet");
  EquivalenceResult check = product_status(reverse_dfa(language), reversed);
  if (check.status != EquivalenceStatus::equal)
    throw PreconditionError("second DFA does not accept the reversed language; witness '" + check.witness + "'");

  const std::size_t k = language.num_symbols();
  const std::size_t m = reversed.num_states();
  auto u = representative_words(language);
  auto v = representative_words(reversed);

  constexpr StateId kUnseen = ~StateId{0};
  std::vector<StateId> id(language.num_states() * m, kUnseen);
  std::vector<PairState> pairs{{language.initial(), reversed.initial()}};
  id[language.initial() * m + reversed.initial()] = 0;
  auto intern = [&](PairState s) {
    StateId& slot = id[s.left * m + s.right];
    if (slot == kUnseen) {
      slot = static_cast<StateId>(pairs.size());
      pairs.push_back(s);
    }
    return slot;
  };

  std::vector<StateId> fwd, bwd;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      PairState s = pairs[i];
      StateId f = intern({language.next(s.left, a), s.right});
      StateId b = intern({s.left, reversed.next(s.right, a)});
      fwd.push_back(f);
      bwd.push_back(b);
    }
  }
  if (pairs.size() > language.num_states() * m)
    throw ConsistencyError("cross product exceeded the n*m state bound");

  std::vector<bool> accepting(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    Word vr = *v[pairs[i].right];
    std::reverse(vr.begin(), vr.end());
    accepting[i] = accepts(language, *u[pairs[i].left] + vr);
  }

  BiaTables tables{language.alphabet(), pairs.size(), 0, std::move(accepting), std::move(fwd), std::move(bwd)};
  BiaValidation validation = validate_bia(tables);
  if (!validation.ok())
    throw ConsistencyError("cross product is not a biautomaton: " + validation.describe(language.alphabet()));
  return {Bia(std::move(tables)), std::move(pairs)};
}

Bia canonical_bia(const Bia& bia) { return reachable_part(bia); }

Bia minimize_bia(const Bia& input) {
  Bia bia = reachable_part(input);
  const std::size_t n = bia.num_states();
  const std::size_t k = bia.num_symbols();

  std::vector<StateId> block(n);
  for (StateId q = 0; q < n; ++q) block[q] = bia.is_accepting(q) ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    std::map<std::vector<StateId>, StateId> signatures;
    std::vector<StateId> refined(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<StateId> sig;
      sig.reserve(2 * k + 1);
      sig.push_back(block[q]);
      for (std::size_t a = 0; a < k; ++a) {
        sig.push_back(block[bia.fwd(q, a)]);
        sig.push_back(block[bia.bwd(q, a)]);
      }
      auto [it, inserted] = signatures.try_emplace(std::move(sig), static_cast<StateId>(signatures.size()));
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (signatures.size() == num_blocks) break;
    num_blocks = signatures.size();
  }

  BiaTables t{bia.alphabet(), num_blocks, block[bia.initial()], std::vector<bool>(num_blocks),
              std::vector<StateId>(num_blocks * k), std::vector<StateId>(num_blocks * k)};
  for (StateId q = 0; q < n; ++q) {
    t.accepting[block[q]] = bia.is_accepting(q);
    for (std::size_t a = 0; a < k; ++a) {
      t.fwd[block[q] * k + a] = block[bia.fwd(q, a)];
      t.bwd[block[q] * k + a] = block[bia.bwd(q, a)];
    }
  }
  BiaValidation validation = validate_bia(t);
  if (!validation.ok())
    throw ConsistencyError("biautomaton quotient is invalid: " + validation.describe(bia.alphabet()));
  return reachable_part(Bia(std::move(t)));
}

Bia minimal_bia_of(const Dfa& dfa) {
  Bia bia = minimize_bia(cross_product(minimize_dfa(dfa), reverse_dfa(dfa)).bia);
  Dfa fwd = extract_fwd(bia);
  Dfa bwd = extract_bwd(bia);
  if (minimize_dfa(fwd).num_states() != fwd.num_states() || minimize_dfa(bwd).num_states() != bwd.num_states())
    throw ConsistencyError("embedded DFAs of the minimal biautomaton are not minimal");
  return bia;
}

bool bia_isomorphic(const Bia& lhs, const Bia& rhs) { return canonical_bia(lhs) == canonical_bia(rhs); }

}  // namespace biaut
