// Copyright 2026 The jtypebench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>
#include <utility>

#include "jtb/inference.h"
#include "jtb/java/keywords.h"
#include "jtb/java/parser.h"

namespace jtb::infer {
namespace {

using kb::KbEntry;
using kb::KnowledgeBase;
using kb::MemberSig;
using Kind = Constraint::Kind;

constexpr std::string_view kObject = "java.lang.Object";

// Numeric rank for widening; char widens to int and above only.
int WideningRank(std::string_view p) {
  static constexpr std::string_view kOrder[] = {"byte", "short", "int",
                                                "long", "float", "double"};
  for (int i = 0; i < 6; ++i) {
    if (p == kOrder[i]) return i;
  }
  return -1;
}

bool Widens(std::string_view from, std::string_view to) {
  if (from == to) return true;
  if (from == "boolean" || to == "boolean" || to == "char") return false;
  if (from == "char") return WideningRank(to) >= 2;
  int a = WideningRank(from);
  int b = WideningRank(to);
  return a >= 0 && b >= 0 && a <= b;
}

std::string_view BoxOf(std::string_view p) {
  static const std::map<std::string_view, std::string_view> kBoxes = {
      {"boolean", "java.lang.Boolean"}, {"byte", "java.lang.Byte"},
      {"short", "java.lang.Short"},     {"char", "java.lang.Character"},
      {"int", "java.lang.Integer"},     {"long", "java.lang.Long"},
      {"float", "java.lang.Float"},     {"double", "java.lang.Double"}};
  auto it = kBoxes.find(p);
  return it == kBoxes.end() ? std::string_view() : it->second;
}

std::string_view UnboxOf(std::string_view ref) {
  for (std::string_view p : {"boolean", "byte", "short", "char", "int", "long",
                             "float", "double"}) {
    if (BoxOf(p) == ref) return p;
  }
  return {};
}

bool IsPrimitive(std::string_view t) { return java::IsPrimitiveTypeName(t); }

std::pair<std::string_view, int> SplitDims(std::string_view t) {
  int dims = 0;
  while (t.ends_with("[]")) {
    t.remove_suffix(2);
    ++dims;
  }
  return {t, dims};
}

bool ReferenceCompatible(const KnowledgeBase& kb, std::string_view a,
                         std::string_view d) {
  if (a == d || d == kObject) return true;
  if (!kb.LookupFqn(a)) return true;  // unknown supertypes
  if (kb.IsSubtype(a, d)) return true;
  // A chain leaving the KB might still reach `d`.
  std::vector<std::string> stack{std::string(a)};
  std::set<std::string> seen;
  while (!stack.empty()) {
    std::string t = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(t).second) continue;
    const KbEntry* e = kb.LookupFqn(t);
    if (!e) {
      if (t != kObject) return true;
      continue;
    }
    stack.insert(stack.end(), e->supertypes.begin(), e->supertypes.end());
  }
  return false;
}

bool Compat(const KnowledgeBase& kb, std::string_view a, std::string_view d) {
  if (a == "void" || d == "void") return false;
  if (a == d) return true;
  auto [ea, da] = SplitDims(a);
  auto [ed, dd] = SplitDims(d);
  if (da > 0 || dd > 0) {
    if (dd == 0) {
      return d == kObject || d == "java.lang.Cloneable" || d == "java.io.Serializable";
    }
    if (da > dd) return ed == kObject;
    if (da < dd) return false;
    if (IsPrimitive(ea) || IsPrimitive(ed)) return ea == ed;
    return ReferenceCompatible(kb, ea, ed);
  }
  const bool pa = IsPrimitive(a);
  const bool pd = IsPrimitive(d);
  if (pa && pd) return Widens(a, d);
  if (pa) {
    if (d == BoxOf(a) || d == kObject || d == "java.io.Serializable" ||
        d == "java.lang.Comparable") {
      return true;
    }
    return d == "java.lang.Number" && a != "boolean" && a != "char";
  }
  if (pd) {
    std::string_view u = UnboxOf(a);
    return !u.empty() && Widens(u, d);
  }
  return ReferenceCompatible(kb, a, d);
}

MemberSig::Kind MemberKind(Kind k) {
  switch (k) {
    case Kind::kHasStaticMethod: return MemberSig::Kind::kStaticMethod;
    case Kind::kHasField: return MemberSig::Kind::kField;
    case Kind::kHasConstructor: return MemberSig::Kind::kConstructor;
    default: return MemberSig::Kind::kMethod;
  }
}

// Members of `entry` a member constraint may be satisfied by.
std::vector<const MemberSig*> Candidates(const KnowledgeBase& kb,
                                         const KbEntry& entry,
                                         const Constraint& c) {
  std::vector<const MemberSig*> out;
  const MemberSig::Kind want = MemberKind(c.kind);
  if (want == MemberSig::Kind::kConstructor) {
    for (const auto& m : entry.members) {
      if (m.kind == want && m.params.size() == c.args.size()) out.push_back(&m);
    }
    return out;
  }
  for (const MemberSig* m : kb.MembersOf(entry.fqn.str())) {
    if (m->kind == want && m->name == c.name && m->params.size() == c.args.size()) {
      out.push_back(m);
    }
  }
  return out;
}

bool HasConstructors(const KbEntry& entry) {
  return std::any_of(entry.members.begin(), entry.members.end(), [](const auto& m) {
    return m.kind == MemberSig::Kind::kConstructor;
  });
}

// A receiver candidate without members we could check against.
enum class Receiver { kNone, kOpen, kKnown };

Receiver Classify(const KnowledgeBase& kb, const std::string& t) {
  if (kb.LookupFqn(t)) return Receiver::kKnown;
  if (IsPrimitive(t) || t == "void") return Receiver::kNone;
  return Receiver::kOpen;
}

using Updates = std::map<int, std::set<std::string>>;

void Narrow(Updates& ups, const std::vector<Domain>& d, int tv,
            std::set<std::string> next) {
  auto it = ups.find(tv);
  if (it != ups.end()) {
    std::set<std::string> both;
    std::set_intersection(it->second.begin(), it->second.end(), next.begin(),
                          next.end(), std::inserter(both, both.end()));
    it->second = std::move(both);
  } else if (!d[tv] || *d[tv] != next) {
    ups.emplace(tv, std::move(next));
  }
}

bool Supports(const KnowledgeBase& kb, const Domain& dom, const std::string& t) {
  if (!dom) return true;
  return std::any_of(dom->begin(), dom->end(),
                     [&](const std::string& a) { return Compat(kb, a, t); });
}

Updates Revise(const KnowledgeBase& kb, const Constraint& c,
               const std::vector<Domain>& d) {
  Updates ups;
  switch (c.kind) {
    case Kind::kSimpleName:
      break;
    case Kind::kIsLiteral:
      if (!d[c.tv]) {
        Narrow(ups, d, c.tv, {c.name});
      } else {
        Narrow(ups, d, c.tv, d[c.tv]->count(c.name) ? std::set{c.name}
                                                    : std::set<std::string>{});
      }
      break;
    case Kind::kAssignableTo: {
      const Domain& s = d[c.tv];
      const Domain& t = d[c.result];
      if (!s || !t) break;
      std::set<std::string> ns, nt;
      for (const auto& a : *s) {
        for (const auto& b : *t) {
          if (Compat(kb, a, b)) {
            ns.insert(a);
            nt.insert(b);
          }
        }
      }
      Narrow(ups, d, c.tv, std::move(ns));
      Narrow(ups, d, c.result, std::move(nt));
      break;
    }
    default: {
      const Domain& r = d[c.tv];
      if (!r) break;
      std::set<std::string> nr;
      bool open = false;
      std::vector<std::set<std::string>> arg_support(c.args.size());
      std::set<std::string> res_support;
      for (const auto& cand : *r) {
        Receiver kind = Classify(kb, cand);
        if (kind == Receiver::kOpen) {
          open = true;
          nr.insert(cand);
        }
        if (kind != Receiver::kKnown) continue;
        const KbEntry& entry = *kb.LookupFqn(cand);
        bool any = c.kind == Kind::kHasConstructor && c.args.empty() &&
                   !HasConstructors(entry);
        for (const MemberSig* m : Candidates(kb, entry, c)) {
          bool ok = true;
          for (size_t i = 0; ok && i < c.args.size(); ++i) {
            ok = Supports(kb, d[c.args[i]], m->params[i]);
          }
          if (ok && c.result >= 0 && d[c.result]) ok = d[c.result]->count(m->returns) > 0;
          if (!ok) continue;
          any = true;
          for (size_t i = 0; i < c.args.size(); ++i) {
            if (!d[c.args[i]]) continue;
            for (const auto& a : *d[c.args[i]]) {
              if (Compat(kb, a, m->params[i])) arg_support[i].insert(a);
            }
          }
          if (c.result >= 0) res_support.insert(m->returns);
        }
        if (any) nr.insert(cand);
      }
      Narrow(ups, d, c.tv, std::move(nr));
      if (open) break;
      if (c.result >= 0) {
        if (d[c.result]) {
          std::set<std::string> keep;
          for (const auto& t : *d[c.result]) {
            if (res_support.count(t)) keep.insert(t);
          }
          res_support = std::move(keep);
        }
        Narrow(ups, d, c.result, std::move(res_support));
      }
      for (size_t i = 0; i < c.args.size(); ++i) {
        if (d[c.args[i]]) Narrow(ups, d, c.args[i], std::move(arg_support[i]));
      }
    }
  }
  return ups;
}

class Solver {
 public:
  Solver(const ConstraintSystem& sys, const KnowledgeBase& kb, const SolveOptions& opts)
      : sys_(sys), kb_(kb), opts_(opts) {}

  Assignment Run() {
    Assignment a;
    const size_t n = sys_.tvs.size();
    a.domains.assign(n, std::nullopt);
    a.unsatisfied.assign(n, false);
    a.disabled.assign(sys_.constraints.size(), false);
    for (const TypeVar& tv : sys_.tvs) {
      if (tv.kind == TypeVar::Kind::kPrimitive || tv.kind == TypeVar::Kind::kQualified) {
        a.domains[tv.id] = std::set<std::string>{tv.origin};
      }
    }
    for (const Constraint& c : sys_.constraints) {
      if (c.kind != Kind::kSimpleName) continue;
      std::set<std::string> cands;
      for (const KbEntry* e : kb_.LookupSimple(c.name)) cands.insert(e->fqn.str());
      if (!cands.empty()) a.domains[c.tv] = std::move(cands);
    }
    for (const Domain& d : a.domains) {
      if (d) a.candidate_budget += d->size();
    }

    // Filtering to a fixpoint; conflicts disable the offending constraint.
    while (true) {
      ++a.rounds;
      bool changed = false;
      for (size_t ci = 0; ci < sys_.constraints.size(); ++ci) {
        if (a.disabled[ci]) continue;
        Updates ups = Revise(kb_, sys_.constraints[ci], a.domains);
        bool empties = false;
        for (const auto& [tv, set] : ups) empties = empties || set.empty();
        if (empties) {
          // Blame the constrained variable when it is the one emptied; its
          // dependents only empty as a consequence.
          auto own = ups.find(sys_.constraints[ci].tv);
          for (const auto& [tv, set] : ups) {
            if (set.empty() && (own == ups.end() || !own->second.empty() || tv == own->first)) {
              a.unsatisfied[tv] = true;
            }
          }
          a.disabled[ci] = true;
          continue;
        }
        for (auto& [tv, set] : ups) {
          if (!a.domains[tv]) a.candidate_budget += set.size();
          a.domains[tv] = std::move(set);
          changed = true;
        }
      }
      if (!changed) break;
    }

    a.solved = true;
    for (const TypeVar& tv : sys_.tvs) {
      if (tv.kind == TypeVar::Kind::kType && a.domains[tv.id] &&
          a.domains[tv.id]->size() != 1) {
        a.solved = false;
      }
    }

    // Labeling: named variables first (name order), candidates in fqn order;
    // the first fully checked model wins.
    for (const TypeVar& tv : sys_.tvs) {
      if (tv.kind == TypeVar::Kind::kType) order_.push_back(tv.id);
    }
    for (const TypeVar& tv : sys_.tvs) {
      if (tv.kind != TypeVar::Kind::kType) order_.push_back(tv.id);
    }
    disabled_ = &a.disabled;
    std::vector<Domain> doms = a.domains;
    if (Search(doms)) {
      a.values = found_;
      a.search_complete = true;
    } else {
      a.values.clear();
      for (const Domain& d : a.domains) {
        a.values.push_back(d && !d->empty() ? Value(*d->begin()) : std::nullopt);
      }
    }
    a.violations = CheckAssignment(sys_, kb_, a.values, a.disabled);
    return a;
  }

 private:
  bool Propagate(std::vector<Domain>& d) {
    while (true) {
      bool changed = false;
      for (size_t ci = 0; ci < sys_.constraints.size(); ++ci) {
        if ((*disabled_)[ci]) continue;
        for (auto& [tv, set] : Revise(kb_, sys_.constraints[ci], d)) {
          if (set.empty()) return false;
          d[tv] = std::move(set);
          changed = true;
        }
      }
      if (!changed) return true;
    }
  }

  bool Search(std::vector<Domain>& d) {
    if (++nodes_ > opts_.node_cap) return false;
    for (int tv : order_) {
      if (!d[tv] || d[tv]->size() <= 1) continue;
      for (const std::string& v : *d[tv]) {
        std::vector<Domain> next = d;
        next[tv] = std::set<std::string>{v};
        if (Propagate(next) && Search(next)) return true;
        if (nodes_ > opts_.node_cap) return false;
      }
      return false;
    }
    std::vector<Value> values;
    for (const Domain& dom : d) {
      values.push_back(dom ? Value(*dom->begin()) : std::nullopt);
    }
    if (!CheckAssignment(sys_, kb_, values, *disabled_).empty()) return false;
    found_ = std::move(values);
    return true;
  }

  const ConstraintSystem& sys_;
  const KnowledgeBase& kb_;
  const SolveOptions& opts_;
  std::vector<int> order_;
  const std::vector<bool>* disabled_ = nullptr;
  std::vector<Value> found_;
  int nodes_ = 0;
};

}  // namespace

bool Compatible(const KnowledgeBase& kb, const Value& actual, const Value& declared) {
  if (!actual || !declared) return true;
  return Compat(kb, *actual, *declared);
}

std::vector<size_t> CheckAssignment(const ConstraintSystem& system,
                                    const KnowledgeBase& kb,
                                    const std::vector<Value>& values,
                                    const std::vector<bool>& skip) {
  std::vector<size_t> violated;
  for (size_t ci = 0; ci < system.constraints.size(); ++ci) {
    if (ci < skip.size() && skip[ci]) continue;
    const Constraint& c = system.constraints[ci];
    const Value& v = values[c.tv];
    bool ok = true;
    switch (c.kind) {
      case Kind::kSimpleName: {
        auto cands = kb.LookupSimple(c.name);
        ok = cands.empty() ? !v
                           : v && std::any_of(cands.begin(), cands.end(),
                                              [&](const KbEntry* e) { return e->fqn.str() == *v; });
        break;
      }
      case Kind::kIsLiteral:
        ok = v && *v == c.name;
        break;
      case Kind::kAssignableTo:
        ok = Compatible(kb, v, values[c.result]);
        break;
      default: {
        if (!v) break;
        Receiver kind = Classify(kb, *v);
        if (kind != Receiver::kKnown) {
          ok = kind == Receiver::kOpen;
          break;
        }
        const KbEntry& entry = *kb.LookupFqn(*v);
        ok = c.kind == Kind::kHasConstructor && c.args.empty() && !HasConstructors(entry);
        for (const MemberSig* m : Candidates(kb, entry, c)) {
          bool match = c.result < 0 || (values[c.result] && *values[c.result] == m->returns);
          for (size_t i = 0; match && i < c.args.size(); ++i) {
            match = Compatible(kb, values[c.args[i]], m->params[i]);
          }
          if (match) {
            ok = true;
            break;
          }
        }
      }
    }
    if (!ok) violated.push_back(ci);
  }
  return violated;
}

Assignment Solve(const ConstraintSystem& system, const KnowledgeBase& kb,
                 const SolveOptions& options) {
  return Solver(system, kb, options).Run();
}

Inference Infer(const Snippet& snippet, const KnowledgeBase& kb) {
  java::CompilationUnit unit = java::Parse(StripImports(snippet.source).source);
  const std::string own_package = unit.package ? unit.package->name : "";
  Inference out;
  out.system = ExtractConstraints(unit);
  out.assignment = Solve(out.system, kb);
  for (const TypeVar& tv : out.system.tvs) {
    if (out.assignment.unsatisfied[tv.id]) out.unsatisfied.push_back(tv.origin);
    if (tv.kind != TypeVar::Kind::kType) continue;
    const Value& v = out.assignment.values[tv.id];
    if (!v) {
      out.unresolved.push_back(tv.origin);
      continue;
    }
    auto fqn = Fqn::Parse(*v);
    if (!fqn) continue;
    const std::string_view pkg = fqn->PackageName();
    if (pkg == "java.lang" || pkg == own_package) continue;
    out.imports.Insert(*fqn);
  }
  return out;
}

ImportSet InferImports(const Snippet& snippet, const KnowledgeBase& kb) {
  return Infer(snippet, kb).imports;
}

}  // namespace jtb::infer
