#include "godel/chain.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace godel {

std::vector<std::string> Chain::variables() const {
  std::vector<std::string> out;
  for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

Chain make_chain(std::vector<std::vector<std::string>> blocks, bool bot_merged,
                 bool top_merged) {
  std::set<std::string> seen;
  for (auto& block : blocks) {
    if (block.empty()) throw semantic_error("chain blocks must be nonempty");
    std::sort(block.begin(), block.end());
    for (const auto& name : block)
      if (!seen.insert(name).second)
        throw semantic_error("variable '" + name + "' occurs twice in a chain");
  }
  if (blocks.empty() && (bot_merged || top_merged))
    throw semantic_error("the empty chain cannot merge F and T");
  if (blocks.size() == 1 && bot_merged && top_merged)
    throw semantic_error("F must not land in the equivalence class of T");
  return Chain{std::move(blocks), bot_merged, top_merged};
}

namespace {

// Bottom-merged < unmerged < both-merged < top-merged; matches the
// single-variable enumeration (F <= a) < T, F < a < T, F < (a <= T).
int flag_rank(const Chain& c) {
  return (c.top_merged ? 2 : 0) + (c.bot_merged ? 0 : 1);
}

bool canonical_less(const Chain& a, const Chain& b) {
  if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
  if (a.blocks != b.blocks) return a.blocks < b.blocks;
  return flag_rank(a) < flag_rank(b);
}

// Every ordered set partition, built by inserting one variable at a time
// into each existing block or as a new block in each gap.
std::vector<std::vector<std::vector<std::string>>> ordered_partitions(
    const std::vector<std::string>& vars) {
  std::vector<std::vector<std::vector<std::string>>> acc = {{}};
  for (const auto& v : vars) {
    std::vector<std::vector<std::vector<std::string>>> next;
    for (const auto& partition : acc) {
      for (std::size_t i = 0; i < partition.size(); ++i) {
        auto copy = partition;
        copy[i].push_back(v);
        next.push_back(std::move(copy));
      }
      for (std::size_t gap = 0; gap <= partition.size(); ++gap) {
        auto copy = partition;
        copy.insert(copy.begin() + gap, {v});
        next.push_back(std::move(copy));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<Chain> enumerate_chains(const std::vector<std::string>& vars) {
  std::vector<std::string> names = vars;
  std::sort(names.begin(), names.end());
  if (std::adjacent_find(names.begin(), names.end()) != names.end())
    throw semantic_error("chain variables must be distinct");

  std::vector<Chain> out;
  for (auto& partition : ordered_partitions(names)) {
    if (partition.empty()) {
      out.push_back(make_chain({}, false, false));
      continue;
    }
    const bool single_block = partition.size() == 1;
    for (int bot = 1; bot >= 0; --bot) {
      for (int top = 0; top <= 1; ++top) {
        if (single_block && bot && top) continue;
        out.push_back(make_chain(partition, bot != 0, top != 0));
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Chain> enumerate_restricted_chains(const std::vector<std::string>& vars) {
  std::vector<Chain> out;
  for (auto& c : enumerate_chains(vars))
    if (c.restricted()) out.push_back(std::move(c));
  return out;
}

Formula chain_formula(const Chain& c) {
  // The full sequence F ? v ? v ? ... ? T with <= inside blocks (and at
  // merged ends) and < everywhere else.
  std::vector<Formula> elems;
  std::vector<bool> equiv_link;  // link i joins elems[i] and elems[i+1]
  elems.push_back(bot());
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    for (std::size_t i = 0; i < c.blocks[b].size(); ++i) {
      equiv_link.push_back(b == 0 && i == 0 ? c.bot_merged : i > 0);
      elems.push_back(atom(c.blocks[b][i]));
    }
  }
  equiv_link.push_back(c.top_merged);
  elems.push_back(top());

  std::optional<Formula> acc;
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
    Formula link = equiv_link[i] ? lequiv(elems[i], elems[i + 1])
                                 : strict_less(elems[i], elems[i + 1]);
    acc = acc ? conj(*acc, std::move(link)) : std::move(link);
  }
  return *acc;
}

namespace {

struct Positions {
  std::map<std::string, int> vars;
  int bot = 0;
  int top = 1;
};

// F sits at position 0; T above every block unless merged.
Positions position_table(const Chain& c) {
  Positions pos;
  int current = c.bot_merged ? 0 : 1;
  for (const auto& block : c.blocks) {
    for (const auto& name : block) pos.vars[name] = current;
    ++current;
  }
  int last = c.blocks.empty() ? 0 : current - 1;
  pos.top = c.top_merged ? last : last + 1;
  return pos;
}

int position_of(const Positions& pos, const Formula& x) {
  switch (x.kind()) {
    case Kind::Bot:
      return pos.bot;
    case Kind::Top:
      return pos.top;
    case Kind::Atom: {
      auto it = pos.vars.find(x.name());
      if (it == pos.vars.end())
        throw semantic_error("symbol '" + x.name() + "' is not in the chain");
      return it->second;
    }
    default:
      throw semantic_error("chain positions exist only for atoms and constants");
  }
}

Formula reduce(const Chain& c, const Positions& pos, const Formula& f,
               DeltaRules rules) {
  switch (f.kind()) {
    case Kind::Atom:
      position_of(pos, f);  // membership check
      return f;
    case Kind::Top:
    case Kind::Bot:
      return f;
    case Kind::And: {
      Formula l = reduce(c, pos, f.left(), rules);
      Formula r = reduce(c, pos, f.right(), rules);
      return position_of(pos, l) <= position_of(pos, r) ? l : r;
    }
    case Kind::Or: {
      Formula l = reduce(c, pos, f.left(), rules);
      Formula r = reduce(c, pos, f.right(), rules);
      return position_of(pos, r) <= position_of(pos, l) ? l : r;
    }
    case Kind::Imp: {
      Formula l = reduce(c, pos, f.left(), rules);
      Formula r = reduce(c, pos, f.right(), rules);
      return position_of(pos, l) <= position_of(pos, r) ? top() : r;
    }
    case Kind::Delta: {
      if (rules == DeltaRules::none)
        throw semantic_error("Delta has no syntactic evaluation rule here");
      Formula inner = reduce(c, pos, f.child(), rules);
      if (inner.kind() == Kind::Top) return top();
      if (inner.kind() == Kind::Bot) return bot();
      if (!c.restricted())
        throw semantic_error(
            "D(variable) only evaluates against a restricted chain");
      return bot();
    }
    case Kind::Forall:
    case Kind::Exists:
      throw semantic_error("syntactic evaluation is propositional");
  }
  throw semantic_error("unreachable formula kind");
}

}  // namespace

bool entails(const Chain& c, const Formula& x, const Formula& y) {
  auto pos = position_table(c);
  return position_of(pos, x) <= position_of(pos, y);
}

Formula syntactic_eval(const Chain& c, const Formula& f, DeltaRules rules) {
  require_propositional(f);
  return reduce(c, position_table(c), f, rules);
}

Chain chain_of(const Interpretation& interp) {
  std::map<int, std::vector<std::string>> by_level;
  for (const auto& [name, level] : interp.levels) by_level[level].push_back(name);
  std::vector<std::vector<std::string>> blocks;
  for (auto& [level, names] : by_level) blocks.push_back(std::move(names));
  bool bot_merged = !by_level.empty() && by_level.begin()->first == 0;
  bool top_merged = !by_level.empty() && by_level.rbegin()->first == interp.scale.top();
  return make_chain(std::move(blocks), bot_merged, top_merged);
}

std::string chain_text(const Chain& c) {
  std::string out = "B";
  for (std::size_t b = 0; b < c.blocks.size(); ++b) {
    for (std::size_t i = 0; i < c.blocks[b].size(); ++i) {
      bool equiv = b == 0 && i == 0 ? c.bot_merged : i > 0;
      out += equiv ? " <= " : " < ";
      out += c.blocks[b][i];
    }
  }
  out += c.top_merged ? " <= T" : " < T";
  return out;
}

}  // namespace godel
