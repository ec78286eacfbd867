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
#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "jtb/inference.h"
#include "jtb/java/bindings.h"
#include "jtb/java/render.h"

namespace jtb::infer {
namespace {

using namespace java;  // NOLINT(build/namespaces)

bool StartsUpper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

std::string_view FirstSegment(std::string_view s) {
  return s.substr(0, s.find('.'));
}

std::string LiteralType(LiteralKind kind) {
  switch (kind) {
    case LiteralKind::kBoolean: return "boolean";
    case LiteralKind::kInt: return "int";
    case LiteralKind::kLong: return "long";
    case LiteralKind::kFloat: return "float";
    case LiteralKind::kDouble: return "double";
    case LiteralKind::kChar: return "char";
    case LiteralKind::kString: return "java.lang.String";
    case LiteralKind::kNull: break;
  }
  return "";
}

bool IsComparison(std::string_view op) {
  return op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" ||
         op == ">=" || op == "&&" || op == "||";
}

class Extractor {
 public:
  explicit Extractor(CompilationUnit unit) : unit_(std::move(unit)) {
    bindings_ = ResolveBindings(unit_);
  }

  ConstraintSystem Run() {
    CollectLocalTypes();
    for (const ClassDecl& cls : unit_.types) {
      for (const Member& m : cls.members) {
        if (const auto* f = m.As<FieldDecl>()) var_tv_[f->decl.id] = TypeTv(f->type);
      }
    }
    for (const ClassDecl& cls : unit_.types) Class(cls);
    return Finish();
  }

 private:
  struct LocalMethod {
    std::string cls;
    std::string name;
    size_t arity;
    const MethodDecl* decl;
  };

  void CollectLocalTypes() {
    for (const ClassDecl& cls : unit_.types) {
      local_types_.insert(cls.name);
      for (const auto& tp : cls.type_params) local_types_.insert(tp.name);
      for (const Member& m : cls.members) {
        if (const auto* md = m.As<MethodDecl>()) {
          for (const auto& tp : md->type_params) local_types_.insert(tp.name);
          if (!md->IsConstructor()) {
            methods_.push_back({cls.name, md->name, md->params.size(), md});
          }
        }
      }
    }
  }

  int NewTv(TypeVar::Kind kind, std::string origin) {
    tvs_.push_back({static_cast<int>(tvs_.size()), kind, std::move(origin)});
    return tvs_.back().id;
  }

  int Keyed(TypeVar::Kind kind, const std::string& key) {
    auto [it, inserted] = keyed_.try_emplace({kind, key}, -1);
    if (inserted) {
      it->second = NewTv(kind, key);
      if (kind == TypeVar::Kind::kType) {
        Add({Constraint::Kind::kSimpleName, it->second, key, {}, -1});
      }
    }
    return it->second;
  }

  int Named(const std::string& simple) {
    if (local_types_.count(simple)) return Keyed(TypeVar::Kind::kOpaque, simple);
    return Keyed(TypeVar::Kind::kType, simple);
  }

  int Fresh(const Expr& e) { return NewTv(TypeVar::Kind::kExpr, RenderExpr(e)); }

  void Add(Constraint c) { constraints_.push_back(std::move(c)); }

  // Type variable for a written type; registers every simple name inside,
  // generic arguments included. Returns -1 for `var` and `void`.
  int TypeTv(const TypeRef& t) {
    for (const TypeRef& arg : t.args) TypeTv(arg);
    if (t.kind == TypeRef::Kind::kVar || t.kind == TypeRef::Kind::kVoid) return -1;
    int base;
    if (t.kind == TypeRef::Kind::kPrimitive) {
      base = Keyed(TypeVar::Kind::kPrimitive, t.name);
    } else {
      base = NameTv(t.name);
    }
    if (t.dims == 0) return base;
    std::string origin = t.name;
    for (int i = 0; i < t.dims; ++i) origin += "[]";
    return Keyed(TypeVar::Kind::kOpaque, origin);
  }

  int NameTv(const std::string& name) {
    if (name.find('.') == std::string::npos) return Named(name);
    std::string first(FirstSegment(name));
    if (local_types_.count(first) || StartsUpper(first)) {
      Named(first);  // Outer.Inner: the outer type needs an import
      return Keyed(TypeVar::Kind::kOpaque, name);
    }
    return Keyed(TypeVar::Kind::kQualified, name);
  }

  void Annotations(const std::vector<std::string>& modifiers) {
    for (const auto& m : modifiers) {
      if (m.size() > 1 && m[0] == '@') NameTv(m.substr(1));
    }
  }

  void Class(const ClassDecl& cls) {
    current_class_ = cls.name;
    Annotations(cls.modifiers);
    for (const auto& tp : cls.type_params) {
      for (const auto& b : tp.bounds) TypeTv(b);
    }
    for (const auto& t : cls.extends) TypeTv(t);
    for (const auto& t : cls.implements) TypeTv(t);
    for (const Member& m : cls.members) {
      if (const auto* f = m.As<FieldDecl>()) {
        Annotations(f->modifiers);
        if (f->init) Assignable(Value(*f->init), var_tv_[f->decl.id]);
      } else if (const auto* md = m.As<MethodDecl>()) {
        Method(*md);
      } else if (const auto* init = m.As<InitializerDecl>()) {
        current_return_ = -1;
        Walk(init->body);
      }
    }
  }

  void Method(const MethodDecl& md) {
    Annotations(md.modifiers);
    for (const auto& tp : md.type_params) {
      for (const auto& b : tp.bounds) TypeTv(b);
    }
    current_return_ = md.return_type ? TypeTv(*md.return_type) : -1;
    for (const Param& p : md.params) {
      Annotations(p.modifiers);
      TypeRef t = p.type;
      if (p.varargs) ++t.dims;
      int tv = TypeTv(p.type);
      var_tv_[p.decl.id] = p.varargs ? TypeTv(t) : tv;
    }
    for (const auto& t : md.throws) TypeTv(t);
    if (md.body) Walk(*md.body);
  }

  void Assignable(int sub, int super) {
    if (sub >= 0 && super >= 0 && sub != super) {
      Add({Constraint::Kind::kAssignableTo, sub, "", {}, super});
    }
  }

  void Walk(const Block& block) {
    for (const Stmt& s : block.stmts) Walk(s);
  }

  void Local(const LocalVarStmt& lv) {
    int tv = TypeTv(lv.type);
    if (lv.init) {
      int init = Value(*lv.init);
      if (tv < 0) {
        tv = init;
      } else {
        Assignable(init, tv);
      }
    }
    if (tv < 0) tv = NewTv(TypeVar::Kind::kExpr, lv.name);
    var_tv_[lv.decl.id] = tv;
  }

  void Walk(const Stmt& stmt) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, ExprStmt>) {
            Value(s.expr);
          } else if constexpr (std::is_same_v<T, LocalVarStmt>) {
            Local(s);
          } else if constexpr (std::is_same_v<T, BlockStmt>) {
            Walk(s.block);
          } else if constexpr (std::is_same_v<T, ReturnStmt>) {
            if (s.value) Assignable(Value(*s.value), current_return_);
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            Value(s.cond);
            Walk(*s.then_branch);
            if (s.else_branch) Walk(**s.else_branch);
          } else if constexpr (std::is_same_v<T, WhileStmt>) {
            Value(s.cond);
            Walk(*s.body);
          } else if constexpr (std::is_same_v<T, ForStmt>) {
            if (s.init_decl) Local(*s.init_decl);
            for (const auto& e : s.init_exprs) Value(e);
            if (s.cond) Value(*s.cond);
            for (const auto& e : s.update) Value(e);
            Walk(*s.body);
          } else if constexpr (std::is_same_v<T, ForEachStmt>) {
            int tv = TypeTv(s.type);
            Value(s.iterable);
            var_tv_[s.decl.id] = tv >= 0 ? tv : NewTv(TypeVar::Kind::kExpr, s.name);
            Walk(*s.body);
          } else if constexpr (std::is_same_v<T, TryStmt>) {
            Walk(s.body);
            for (const auto& c : s.catches) {
              int tv = -1;
              for (const auto& t : c.types) tv = TypeTv(t);
              if (c.types.size() != 1) tv = NewTv(TypeVar::Kind::kExpr, c.name);
              var_tv_[c.decl.id] = tv;
              Walk(c.body);
            }
            if (s.finally_block) Walk(*s.finally_block);
          } else if constexpr (std::is_same_v<T, ThrowStmt>) {
            Value(s.value);
          }
        },
        stmt.node);
  }

  // Dotted spelling of a chain of unresolved names, or nullopt.
  std::optional<std::string> DottedName(const Expr& e) {
    if (const auto* n = e.As<NameExpr>()) {
      if (n->decl.id >= 0) return std::nullopt;
      return n->name;
    }
    if (const auto* f = e.As<FieldAccessExpr>()) {
      if (f->decl.id >= 0) return std::nullopt;
      auto head = DottedName(*f->object);
      if (!head) return std::nullopt;
      return *head + "." + f->name;
    }
    return std::nullopt;
  }

  // Type variable when `e` names a type (static member access), else nullopt.
  // Package-qualified spellings end at their first capitalized segment.
  std::optional<int> TypeQualifier(const Expr& e) {
    auto dotted = DottedName(e);
    if (!dotted) return std::nullopt;
    std::string first(FirstSegment(*dotted));
    if (dotted->find('.') == std::string::npos) {
      if (local_types_.count(first) || StartsUpper(first)) return Named(first);
      return std::nullopt;
    }
    if (local_types_.count(first) || StartsUpper(first)) return std::nullopt;
    // a.b.C is a type only if C is its first capitalized segment.
    size_t last_dot = dotted->rfind('.');
    std::string_view head = std::string_view(*dotted).substr(0, last_dot);
    std::string_view tail = std::string_view(*dotted).substr(last_dot + 1);
    if (!StartsUpper(tail)) return std::nullopt;
    for (size_t start = 0; start < head.size();) {
      size_t dot = head.find('.', start);
      if (StartsUpper(head.substr(start, dot - start))) return std::nullopt;
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return Keyed(TypeVar::Kind::kQualified, *dotted);
  }

  bool IsLocalClassTv(int tv) const {
    return tvs_[tv].kind == TypeVar::Kind::kOpaque &&
           local_types_.count(tvs_[tv].origin) &&
           std::any_of(unit_.types.begin(), unit_.types.end(),
                       [&](const ClassDecl& c) { return c.name == tvs_[tv].origin; });
  }

  // Result variable of a call to a method declared in the snippet.
  std::optional<int> LocalCall(const std::string& cls, const std::string& name,
                               const std::vector<int>& args, const Expr& e) {
    const LocalMethod* found = nullptr;
    int matches = 0;
    for (const auto& m : methods_) {
      if (m.name == name && m.arity == args.size() && (cls.empty() || m.cls == cls)) {
        found = &m;
        ++matches;
      }
    }
    if (matches != 1) return std::nullopt;
    for (size_t i = 0; i < args.size(); ++i) {
      const Param& p = found->decl->params[i];
      if (!p.varargs) Assignable(args[i], TypeTv(p.type));
    }
    int ret = TypeTv(*found->decl->return_type);
    return ret >= 0 ? ret : Fresh(e);
  }

  std::vector<int> Args(const std::vector<Expr>& args) {
    std::vector<int> out;
    for (const Expr& a : args) out.push_back(Value(a));
    return out;
  }

  int Call(const MethodCallExpr& call, const Expr& e) {
    if (!call.receiver) {
      std::vector<int> args = Args(call.args);
      if (call.name == "this" || call.name == "super") return Fresh(e);
      auto local = LocalCall(current_class_, call.name, args, e);
      if (!local) local = LocalCall("", call.name, args, e);
      return local ? *local : Fresh(e);
    }
    const Expr& recv = **call.receiver;
    if (recv.Is<ThisExpr>()) {
      std::vector<int> args = Args(call.args);
      auto local = LocalCall(current_class_, call.name, args, e);
      return local ? *local : Fresh(e);
    }
    auto type = TypeQualifier(recv);
    int r = type ? *type : Value(recv);
    std::vector<int> args = Args(call.args);
    if (IsLocalClassTv(r)) {
      auto local = LocalCall(tvs_[r].origin, call.name, args, e);
      return local ? *local : Fresh(e);
    }
    int result = Fresh(e);
    Add({type ? Constraint::Kind::kHasStaticMethod : Constraint::Kind::kHasMethod,
         r, call.name, std::move(args), result});
    return result;
  }

  int Field(const FieldAccessExpr& fa, const Expr& e) {
    if (fa.decl.id >= 0) {
      Value(*fa.object);
      auto it = var_tv_.find(fa.decl.id);
      return it != var_tv_.end() ? it->second : Fresh(e);
    }
    if (auto whole = TypeQualifier(e)) return *whole;
    int owner;
    if (auto type = TypeQualifier(*fa.object)) {
      owner = *type;
    } else if (DottedName(*fa.object)) {
      return Fresh(e);  // part of a package or unresolved name chain
    } else {
      owner = Value(*fa.object);
    }
    int result = Fresh(e);
    if (!IsLocalClassTv(owner)) {
      Add({Constraint::Kind::kHasField, owner, fa.name, {}, result});
    }
    return result;
  }

  int Literal(const std::string& type, const Expr& e) {
    int tv = Fresh(e);
    Add({Constraint::Kind::kIsLiteral, tv, type, {}, -1});
    return tv;
  }

  // Type variable denoting the value of `e`; emits constraints on the way.
  int Value(const Expr& e) {
    return std::visit(
        [&](const auto& x) -> int {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, NameExpr>) {
            if (x.decl.id >= 0) {
              auto it = var_tv_.find(x.decl.id);
              if (it != var_tv_.end()) return it->second;
              return Fresh(e);
            }
            if (auto type = TypeQualifier(e)) return *type;
            return Fresh(e);
          } else if constexpr (std::is_same_v<T, LiteralExpr>) {
            std::string type = LiteralType(x.kind);
            return type.empty() ? Fresh(e) : Literal(type, e);
          } else if constexpr (std::is_same_v<T, ThisExpr>) {
            return Named(current_class_);
          } else if constexpr (std::is_same_v<T, SuperExpr>) {
            for (const auto& cls : unit_.types) {
              if (cls.name == current_class_ && !cls.is_interface &&
                  !cls.extends.empty()) {
                return TypeTv(cls.extends[0]);
              }
            }
            return Fresh(e);
          } else if constexpr (std::is_same_v<T, FieldAccessExpr>) {
            return Field(x, e);
          } else if constexpr (std::is_same_v<T, MethodCallExpr>) {
            return Call(x, e);
          } else if constexpr (std::is_same_v<T, NewExpr>) {
            int t = TypeTv(x.type);
            std::vector<int> args = Args(x.args);
            if (tvs_[t].kind != TypeVar::Kind::kOpaque) {
              Add({Constraint::Kind::kHasConstructor, t, "", std::move(args), -1});
            }
            return t;
          } else if constexpr (std::is_same_v<T, NewArrayExpr>) {
            for (const auto& d : x.dim_exprs) Value(d);
            if (x.init) Value(**x.init);
            TypeRef t = x.element;
            t.dims = static_cast<int>(x.dim_exprs.size()) + x.extra_dims;
            return TypeTv(t);
          } else if constexpr (std::is_same_v<T, ArrayInitExpr>) {
            for (const auto& el : x.elements) Value(el);
            return Fresh(e);
          } else if constexpr (std::is_same_v<T, ArrayAccessExpr>) {
            Value(*x.array);
            Value(*x.index);
            return Fresh(e);
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            int operand = Value(*x.operand);
            if (x.op == "!") return Literal("boolean", e);
            return operand;
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            Value(*x.lhs);
            Value(*x.rhs);
            return IsComparison(x.op) ? Literal("boolean", e) : Fresh(e);
          } else if constexpr (std::is_same_v<T, AssignExpr>) {
            int target = Value(*x.target);
            int value = Value(*x.value);
            if (x.op == "=") Assignable(value, target);
            return target;
          } else if constexpr (std::is_same_v<T, ConditionalExpr>) {
            Value(*x.cond);
            Value(*x.then_expr);
            Value(*x.else_expr);
            return Fresh(e);
          } else if constexpr (std::is_same_v<T, CastExpr>) {
            Value(*x.operand);
            return TypeTv(x.type);
          } else if constexpr (std::is_same_v<T, InstanceOfExpr>) {
            Value(*x.operand);
            TypeTv(x.type);
            return Literal("boolean", e);
          } else if constexpr (std::is_same_v<T, ClassLiteralExpr>) {
            TypeTv(x.type);
            return Fresh(e);
          } else if constexpr (std::is_same_v<T, LambdaExpr>) {
            for (const auto& p : x.params) {
              int tv = p.type ? TypeTv(*p.type) : -1;
              var_tv_[p.decl.id] = tv >= 0 ? tv : NewTv(TypeVar::Kind::kExpr, p.name);
            }
            int saved = current_return_;
            current_return_ = -1;
            if (const auto* body = std::get_if<ExprBox>(&x.body)) {
              Value(**body);
            } else {
              Walk(*std::get<Box<Block>>(x.body));
            }
            current_return_ = saved;
            return Fresh(e);
          }
        },
        e.node);
  }

  ConstraintSystem Finish() {
    // Stable renumbering: named kinds by origin, expressions in source order.
    std::vector<int> order(tvs_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const TypeVar& x = tvs_[a];
      const TypeVar& y = tvs_[b];
      if (x.kind != y.kind) return x.kind < y.kind;
      if (x.kind == TypeVar::Kind::kExpr) return false;
      return x.origin < y.origin;
    });
    std::vector<int> remap(tvs_.size());
    ConstraintSystem sys;
    for (size_t i = 0; i < order.size(); ++i) {
      remap[order[i]] = static_cast<int>(i);
      TypeVar tv = tvs_[order[i]];
      tv.id = static_cast<int>(i);
      sys.tvs.push_back(std::move(tv));
    }
    std::set<std::string> seen;
    for (Constraint c : constraints_) {
      c.tv = remap[c.tv];
      if (c.result >= 0) c.result = remap[c.result];
      for (int& a : c.args) a = remap[a];
      if (seen.insert(c.ToString()).second) sys.constraints.push_back(std::move(c));
    }
    return sys;
  }

  CompilationUnit unit_;
  Bindings bindings_;
  std::set<std::string> local_types_;
  std::vector<LocalMethod> methods_;
  std::vector<TypeVar> tvs_;
  std::vector<Constraint> constraints_;
  std::map<std::pair<TypeVar::Kind, std::string>, int> keyed_;
  std::map<int, int> var_tv_;
  std::string current_class_;
  int current_return_ = -1;
};

std::string TvName(int tv) { return "t" + std::to_string(tv); }

std::string TvList(const std::vector<int>& tvs) {
  std::string out = "[";
  for (size_t i = 0; i < tvs.size(); ++i) {
    if (i) out += ", ";
    out += TvName(tvs[i]);
  }
  return out + "]";
}

}  // namespace

std::string_view TypeVarKindName(TypeVar::Kind kind) {
  switch (kind) {
    case TypeVar::Kind::kType: return "type";
    case TypeVar::Kind::kPrimitive: return "primitive";
    case TypeVar::Kind::kQualified: return "qualified";
    case TypeVar::Kind::kOpaque: return "opaque";
    case TypeVar::Kind::kExpr: return "expr";
  }
  return "unknown";
}

std::string Constraint::ToString() const {
  switch (kind) {
    case Kind::kSimpleName:
      return "SimpleName(" + TvName(tv) + ", " + name + ")";
    case Kind::kHasMethod:
      return "HasMethod(" + TvName(tv) + ", " + name + ", " + TvList(args) +
             ", " + TvName(result) + ")";
    case Kind::kHasStaticMethod:
      return "HasStaticMethod(" + TvName(tv) + ", " + name + ", " +
             TvList(args) + ", " + TvName(result) + ")";
    case Kind::kHasField:
      return "HasField(" + TvName(tv) + ", " + name + ", " + TvName(result) + ")";
    case Kind::kHasConstructor:
      return "HasConstructor(" + TvName(tv) + ", " + TvList(args) + ")";
    case Kind::kAssignableTo:
      return "AssignableTo(" + TvName(tv) + ", " + TvName(result) + ")";
    case Kind::kIsLiteral:
      return "IsLiteral(" + TvName(tv) + ", " + name + ")";
  }
  return "";
}

std::string ConstraintSystem::Dump() const {
  std::string out;
  for (const TypeVar& tv : tvs) {
    out += TvName(tv.id) + " " + std::string(TypeVarKindName(tv.kind)) + " " +
           tv.origin + "\n";
  }
  for (const Constraint& c : constraints) out += c.ToString() + "\n";
  return out;
}

ConstraintSystem ExtractConstraints(const java::CompilationUnit& unit) {
  return Extractor(unit).Run();
}

}  // namespace jtb::infer
