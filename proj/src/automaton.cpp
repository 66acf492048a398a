#include "algser/automaton.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "algser/errors.hpp"

namespace algser {

using nlohmann::json;

Dfao build_dfao(const CompiledSeries& cs, std::size_t max_states) {
  const std::uint32_t p = cs.p.value();
  Dfao d;
  d.p = p;
  std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
  std::vector<std::vector<std::uint32_t>> order;
  auto intern = [&](std::vector<std::uint32_t> s) {
    auto [it, fresh] = seen.try_emplace(std::move(s), static_cast<std::uint32_t>(order.size()));
    if (fresh) {
      if (order.size() == max_states) {
        throw CapExceeded("state cap " + std::to_string(max_states) + " exceeded");
      }
      order.push_back(it->first);
    }
    return it->second;
  };
  d.initial = intern(cs.f_coordinates());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::vector<std::uint32_t> s = order[i];
    d.outputs.push_back(read_out(cs, s));
    for (std::uint32_t r = 0; r < p; ++r) d.transitions.push_back(intern(apply_digit(cs, r, s)));
  }
  return d;
}

Dfao minimize(const Dfao& d) {
  const std::size_t n = d.size();
  std::vector<std::uint32_t> cls(n);
  std::size_t classes = 0;
  {
    std::map<std::uint32_t, std::uint32_t> ids;
    for (std::size_t s = 0; s < n; ++s) {
      cls[s] = ids.try_emplace(d.outputs[s], static_cast<std::uint32_t>(ids.size())).first->second;
    }
    classes = ids.size();
  }
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> sig{cls[s]};
      for (std::uint32_t r = 0; r < d.p; ++r) sig.push_back(cls[d.next(static_cast<std::uint32_t>(s), r)]);
      next[s] = ids.try_emplace(std::move(sig), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    cls = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }

  // Renumber reachable classes in breadth-first order from the initial state.
  std::vector<std::uint32_t> rep_of_class(n, UINT32_MAX);
  for (std::size_t s = n; s-- > 0;) rep_of_class[cls[s]] = static_cast<std::uint32_t>(s);
  std::vector<std::uint32_t> number(n, UINT32_MAX);
  std::vector<std::uint32_t> queue{cls[d.initial]};
  number[cls[d.initial]] = 0;
  Dfao out;
  out.p = d.p;
  out.offset = d.offset;
  out.initial = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::uint32_t rep = rep_of_class[queue[i]];
    out.outputs.push_back(d.outputs[rep]);
    for (std::uint32_t r = 0; r < d.p; ++r) {
      const std::uint32_t c = cls[d.next(rep, r)];
      if (number[c] == UINT32_MAX) {
        number[c] = static_cast<std::uint32_t>(queue.size());
        queue.push_back(c);
      }
      out.transitions.push_back(number[c]);
    }
  }
  return out;
}

std::uint32_t run_digits(const Dfao& d, std::span<const std::uint32_t> digits) {
  std::uint32_t s = d.initial;
  for (std::uint32_t r : digits) {
    if (r >= d.p) throw std::invalid_argument("digit out of range");
    s = d.next(s, r);
  }
  return d.outputs[s];
}

std::uint32_t run(const Dfao& d, const BigIndex& n) {
  if (n < d.offset) throw std::invalid_argument("index below the automaton offset");
  return run_digits(d, digits_base_p(n - d.offset, d.p));
}

std::string export_dot(const Dfao& d) {
  std::ostringstream os;
  os << "digraph dfao {\n  rankdir=LR;\n  start [shape=point];\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    os << "  q" << s << " [label=\"q" << s << "/" << d.outputs[s] << "\"];\n";
  }
  os << "  start -> q" << d.initial << ";\n";
  for (std::size_t s = 0; s < d.size(); ++s) {
    for (std::uint32_t r = 0; r < d.p; ++r) {
      os << "  q" << s << " -> q" << d.next(static_cast<std::uint32_t>(s), r) << " [label=\"" << r << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

json to_json(const Dfao& d) {
  return json{{"format", 1},
              {"p", d.p},
              {"states", d.outputs},
              {"initial", d.initial},
              {"transitions", d.transitions},
              {"offset", d.offset}};
}

namespace {

std::uint64_t nat(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(name, "missing field");
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
    throw SchemaError(name, "expected a natural number");
  }
  return it->get<std::uint64_t>();
}

std::vector<std::uint32_t> nat_array(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(name, "missing field");
  if (!it->is_array()) throw SchemaError(name, "expected an array");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& x = (*it)[i];
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() > UINT32_MAX) {
      throw SchemaError(std::string(name) + "[" + std::to_string(i) + "]", "expected a natural number");
    }
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

Dfao dfao_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  if (doc.contains("format") && nat(doc, "format") != 1) throw SchemaError("format", "unsupported format");
  Dfao d;
  const std::uint64_t p = nat(doc, "p");
  if (p < 2 || p > PrimeModulus::kMax || !is_prime(p)) throw SchemaError("p", "not a prime in [2, 65536]");
  d.p = static_cast<std::uint32_t>(p);
  d.outputs = nat_array(doc, "states");
  if (d.outputs.empty()) throw SchemaError("states", "at least one state required");
  for (std::size_t i = 0; i < d.outputs.size(); ++i) {
    if (d.outputs[i] >= d.p) throw SchemaError("states[" + std::to_string(i) + "]", "output out of range");
  }
  const std::uint64_t initial = nat(doc, "initial");
  if (initial >= d.outputs.size()) throw SchemaError("initial", "no such state");
  d.initial = static_cast<std::uint32_t>(initial);
  d.transitions = nat_array(doc, "transitions");
  if (d.transitions.size() != d.outputs.size() * d.p) {
    throw SchemaError("transitions", "expected states * p entries");
  }
  for (std::size_t i = 0; i < d.transitions.size(); ++i) {
    if (d.transitions[i] >= d.outputs.size()) {
      throw SchemaError("transitions[" + std::to_string(i) + "]", "no such state");
    }
  }
  const std::uint64_t offset = doc.contains("offset") ? nat(doc, "offset") : 0;
  if (offset > 1) throw SchemaError("offset", "expected 0 or 1");
  d.offset = static_cast<std::uint32_t>(offset);
  return d;
}

}  // namespace algser
