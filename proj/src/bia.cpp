#include "biaut/bia.hpp"

#include <deque>

#include "biaut/error.hpp"

namespace biaut {

namespace {

void check_shape(const BiaTables& t) {
  if (t.alphabet.empty()) throw PreconditionError("biautomaton alphabet must not be empty");
  if (t.num_states == 0) throw PreconditionError("biautomaton must have at least one state");
  if (t.initial >= t.num_states) throw PreconditionError("biautomaton initial state out of range");
  if (t.accepting.size() != t.num_states) throw PreconditionError("biautomaton accepting vector has wrong size");
  const std::size_t cells = t.num_states * t.alphabet.size();
  if (t.fwd.size() != cells || t.bwd.size() != cells)
    throw PreconditionError("biautomaton transition tables are not total");
  for (std::size_t i = 0; i < cells; ++i)
    if (t.fwd[i] >= t.num_states || t.bwd[i] >= t.num_states)
      throw PreconditionError("biautomaton transition target out of range");
}

// Canonical numbering over both transition functions; returns the visiting
// order of old states.
std::vector<StateId> bfs_order(const Bia& bia) {
  constexpr StateId kUnseen = ~StateId{0};
  std::vector<StateId> id(bia.num_states(), kUnseen);
  std::vector<StateId> order{bia.initial()};
  id[bia.initial()] = 0;
  auto visit = [&](StateId t) {
    if (id[t] == kUnseen) {
      id[t] = static_cast<StateId>(order.size());
      order.push_back(t);
    }
  };
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < bia.num_symbols(); ++a) {
      visit(bia.fwd(order[i], a));
      visit(bia.bwd(order[i], a));
    }
  return order;
}

Dfa extract(const Bia& bia, Direction dir) {
  const std::size_t k = bia.num_symbols();
  auto step = [&](StateId q, std::size_t a) { return dir == Direction::forward ? bia.fwd(q, a) : bia.bwd(q, a); };
  constexpr StateId kUnseen = ~StateId{0};
  std::vector<StateId> id(bia.num_states(), kUnseen);
  std::vector<StateId> order{bia.initial()};
  id[bia.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      StateId t = step(order[i], a);
      if (id[t] == kUnseen) {
        id[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  std::vector<bool> accepting(order.size());
  std::vector<StateId> delta(order.size() * k);
  for (std::size_t i = 0; i < order.size(); ++i) {
    accepting[i] = bia.is_accepting(order[i]);
    for (std::size_t a = 0; a < k; ++a) delta[i * k + a] = id[step(order[i], a)];
  }
  return Dfa(bia.alphabet(), order.size(), 0, std::move(accepting), std::move(delta));
}

}  // namespace

std::string BiaValidation::describe(const Alphabet& alphabet) const {
  if (diamond) {
    const auto& d = *diamond;
    return "diamond property fails at (q" + std::to_string(d.state) + ", " + alphabet[d.a] + ", " + alphabet[d.b] +
           "): (q.a)ob = q" + std::to_string(d.fwd_then_bwd) + " but (qob).a = q" + std::to_string(d.bwd_then_fwd);
  }
  if (acceptance) {
    return "acceptance property fails at (q" + std::to_string(acceptance->state) + ", " +
           alphabet[acceptance->symbol] + ")";
  }
  return "ok";
}

BiaValidation validate_bia(const BiaTables& t) {
  check_shape(t);
  const std::size_t k = t.alphabet.size();
  auto fwd = [&](StateId q, std::size_t a) { return t.fwd[q * k + a]; };
  auto bwd = [&](StateId q, std::size_t a) { return t.bwd[q * k + a]; };
  BiaValidation result;
  for (StateId q = 0; q < t.num_states && !result.diamond; ++q)
    for (std::size_t a = 0; a < k && !result.diamond; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        StateId lhs = bwd(fwd(q, a), b);
        StateId rhs = fwd(bwd(q, b), a);
        if (lhs != rhs) {
          result.diamond = DiamondViolation{q, a, b, lhs, rhs};
          break;
        }
      }
  for (StateId q = 0; q < t.num_states && !result.acceptance; ++q)
    for (std::size_t a = 0; a < k; ++a)
      if (t.accepting[fwd(q, a)] != t.accepting[bwd(q, a)]) {
        result.acceptance = AcceptanceViolation{q, a};
        break;
      }
  return result;
}

Bia::Bia(BiaTables tables) : t_(std::move(tables)) {
  BiaValidation v = validate_bia(t_);
  if (!v.ok()) throw InvalidBiautomaton(v.describe(t_.alphabet));
}

StateId Bia::read_forward(StateId q, std::string_view word) const {
  for (char c : word) q = fwd(q, alphabet().require(c));
  return q;
}

StateId Bia::read_backward(StateId q, std::string_view word) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) q = bwd(q, alphabet().require(*it));
  return q;
}

bool Bia::is_sink(StateId q) const {
  for (std::size_t a = 0; a < num_symbols(); ++a)
    if (fwd(q, a) != q || bwd(q, a) != q) return false;
  return true;
}

bool accepts(const Bia& bia, std::string_view word) { return bia.is_accepting(bia.read_forward(bia.initial(), word)); }

bool accepts_split(const Bia& bia, const Split& split) {
  StateId q = bia.initial();
  for (const auto& step : split) q = bia.read(q, step.u, step.v);
  return bia.is_accepting(q);
}

Dfa extract_fwd(const Bia& bia) { return extract(bia, Direction::forward); }
Dfa extract_bwd(const Bia& bia) { return extract(bia, Direction::backward); }

Bia reachable_part(const Bia& bia) {
  std::vector<StateId> order = bfs_order(bia);
  std::vector<StateId> id(bia.num_states(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<StateId>(i);
  const std::size_t k = bia.num_symbols();
  BiaTables t{bia.alphabet(), order.size(), 0, std::vector<bool>(order.size()), std::vector<StateId>(order.size() * k),
              std::vector<StateId>(order.size() * k)};
  for (std::size_t i = 0; i < order.size(); ++i) {
    t.accepting[i] = bia.is_accepting(order[i]);
    for (std::size_t a = 0; a < k; ++a) {
      t.fwd[i * k + a] = id[bia.fwd(order[i], a)];
      t.bwd[i * k + a] = id[bia.bwd(order[i], a)];
    }
  }
  return Bia(std::move(t));
}

std::vector<std::optional<SplitStep>> reaching_pairs(const Bia& bia) {
  std::vector<std::optional<SplitStep>> pairs(bia.num_states());
  pairs[bia.initial()] = SplitStep{};
  std::deque<StateId> queue{bia.initial()};
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < bia.num_symbols(); ++a) {
      char c = bia.alphabet()[a];
      StateId f = bia.fwd(q, a);
      if (!pairs[f]) {
        pairs[f] = SplitStep{pairs[q]->u + c, pairs[q]->v};
        queue.push_back(f);
      }
      StateId b = bia.bwd(q, a);
      if (!pairs[b]) {
        pairs[b] = SplitStep{pairs[q]->u, c + pairs[q]->v};
        queue.push_back(b);
      }
    }
  }
  return pairs;
}

}  // namespace biaut
