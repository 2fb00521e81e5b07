#include "kgraph/set_expr.hpp"

#include <algorithm>
#include <variant>

namespace kgraph {

namespace {

struct Cylinder {
  Morphism lambda;
};
struct Atom {
  InfinitePath x;
};
struct Full {};
struct Complement {
  SetExpr inner;
};
struct Union {
  std::vector<SetExpr> parts;
};
struct Intersection {
  std::vector<SetExpr> parts;
};
struct PrefixImage {
  Morphism lambda;
  SetExpr inner;
};
struct PrefixPreimage {
  Morphism lambda;
  SetExpr inner;
};
struct ShiftPreimage {
  Degree n;
  SetExpr inner;
};

}  // namespace

struct SetExpr::Node {
  std::variant<Cylinder, Atom, Full, Complement, Union, Intersection, PrefixImage,
               PrefixPreimage, ShiftPreimage>
      value;
};

template <class T>
SetExpr SetExpr::make(T value) {
  return SetExpr(std::make_shared<const Node>(Node{std::move(value)}));
}

SetExpr SetExpr::cylinder(Morphism lambda) { return make(Cylinder{std::move(lambda)}); }
SetExpr SetExpr::atom(InfinitePath x) { return make(Atom{std::move(x)}); }
SetExpr SetExpr::full() { return make(Full{}); }
SetExpr SetExpr::empty() { return complement(full()); }
SetExpr SetExpr::complement(SetExpr s) { return make(Complement{std::move(s)}); }
SetExpr SetExpr::unite(std::vector<SetExpr> parts) { return make(Union{std::move(parts)}); }
SetExpr SetExpr::intersect(std::vector<SetExpr> parts) {
  return make(Intersection{std::move(parts)});
}
SetExpr SetExpr::prefix_image(Morphism lambda, SetExpr s) {
  return make(PrefixImage{std::move(lambda), std::move(s)});
}
SetExpr SetExpr::prefix_preimage(Morphism lambda, SetExpr s) {
  return make(PrefixPreimage{std::move(lambda), std::move(s)});
}
SetExpr SetExpr::shift_preimage(Degree n, SetExpr s) {
  return make(ShiftPreimage{std::move(n), std::move(s)});
}

bool SetExpr::contains(const PathSpace& space, const InfinitePath& x) const {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Cylinder>) {
          return x.range() == n.lambda.range() && space.segment(x, n.lambda.degree()) == n.lambda;
        } else if constexpr (std::is_same_v<T, Atom>) {
          return space.equal(x, n.x).same();
        } else if constexpr (std::is_same_v<T, Full>) {
          return true;
        } else if constexpr (std::is_same_v<T, Complement>) {
          return !n.inner.contains(space, x);
        } else if constexpr (std::is_same_v<T, Union>) {
          return std::any_of(n.parts.begin(), n.parts.end(),
                             [&](const SetExpr& s) { return s.contains(space, x); });
        } else if constexpr (std::is_same_v<T, Intersection>) {
          return std::all_of(n.parts.begin(), n.parts.end(),
                             [&](const SetExpr& s) { return s.contains(space, x); });
        } else if constexpr (std::is_same_v<T, PrefixImage>) {
          if (x.range() != n.lambda.range()) return false;
          if (space.segment(x, n.lambda.degree()) != n.lambda) return false;
          return n.inner.contains(space, space.shift(x, n.lambda.degree()));
        } else if constexpr (std::is_same_v<T, PrefixPreimage>) {
          if (x.range() != n.lambda.source()) return false;
          return n.inner.contains(space, space.prefix(n.lambda, x));
        } else {
          return n.inner.contains(space, space.shift(x, n.n));
        }
      },
      node_->value);
}

std::string SetExpr::describe(const PathSpace& space) const {
  const KGraph& g = space.graph();
  auto list = [&](const std::vector<SetExpr>& parts, const char* sep) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += sep;
      out += parts[i].describe(space);
    }
    return out + ")";
  };
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Cylinder>) {
          return "Z(" + g.format(n.lambda) + ")";
        } else if constexpr (std::is_same_v<T, Atom>) {
          return "{" + space.format(n.x) + "}";
        } else if constexpr (std::is_same_v<T, Full>) {
          return "X";
        } else if constexpr (std::is_same_v<T, Complement>) {
          return "not " + n.inner.describe(space);
        } else if constexpr (std::is_same_v<T, Union>) {
          return list(n.parts, " or ");
        } else if constexpr (std::is_same_v<T, Intersection>) {
          return list(n.parts, " and ");
        } else if constexpr (std::is_same_v<T, PrefixImage>) {
          return g.format(n.lambda) + "." + n.inner.describe(space);
        } else if constexpr (std::is_same_v<T, PrefixPreimage>) {
          return "prefix^-1[" + g.format(n.lambda) + "] " + n.inner.describe(space);
        } else {
          return "shift^-1[" + n.n.to_string() + "] " + n.inner.describe(space);
        }
      },
      node_->value);
}

}  // namespace kgraph
