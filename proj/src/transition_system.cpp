#include "biaut/transition_system.hpp"

#include "biaut/error.hpp"

namespace biaut {

TransitionSystem::TransitionSystem(const Dfa& dfa)
    : alphabet(dfa.alphabet()), num_states(dfa.num_states()), initial(dfa.initial()), accepting(dfa.accepting()) {
  for (std::size_t a = 0; a < dfa.num_symbols(); ++a) {
    letters.push_back({a, Direction::forward});
    std::vector<StateId> image(num_states);
    for (StateId q = 0; q < num_states; ++q) image[q] = dfa.next(q, a);
    maps.push_back(std::move(image));
  }
}

TransitionSystem::TransitionSystem(const Bia& bia)
    : alphabet(bia.alphabet()),
      num_states(bia.num_states()),
      initial(bia.initial()),
      accepting(bia.accepting()),
      two_way(true) {
  for (std::size_t a = 0; a < bia.num_symbols(); ++a) {
    std::vector<StateId> f(num_states), b(num_states);
    for (StateId q = 0; q < num_states; ++q) {
      f[q] = bia.fwd(q, a);
      b[q] = bia.bwd(q, a);
    }
    letters.push_back({a, Direction::forward});
    maps.push_back(std::move(f));
    letters.push_back({a, Direction::backward});
    maps.push_back(std::move(b));
  }
}

bool TransitionSystem::is_sink(StateId q) const {
  for (const auto& m : maps)
    if (m[q] != q) return false;
  return true;
}

StateId TransitionSystem::apply(StateId q, std::string_view u, std::string_view v) const {
  if (!two_way && !v.empty()) throw PreconditionError("a DFA has no backward transitions");
  for (char c : u) q = map({alphabet.require(c), Direction::forward})[q];
  for (auto it = v.rbegin(); it != v.rend(); ++it) q = map({alphabet.require(*it), Direction::backward})[q];
  return q;
}

std::string letter_name(const TransitionSystem& sys, Letter l) {
  std::string name(1, sys.alphabet[l.symbol]);
  if (sys.two_way) name += std::string("/") + direction_name(l.dir);
  return name;
}

}  // namespace biaut
