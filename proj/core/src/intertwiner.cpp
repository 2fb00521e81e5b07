#include "kgraph/intertwiner.hpp"

#include "kgraph/decisions.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

namespace {

Vec fiber_map(const Representation& from, std::size_t from_point, std::size_t to_point,
              const Matrix& u, const Vec& v) {
  Vec out;
  for (const auto& [i, c] : v.terms()) {
    if (i.point != from_point) {
      throw Error(ErrorCode::NotWellDefined,
                  "decomposition does not return to the base: " + from.format(i));
    }
    for (std::size_t k = 0; k < u.rows(); ++k) {
      Scalar entry = u(k, i.fiber - 1);
      if (!entry.is_zero()) out.add({to_point, static_cast<std::uint32_t>(k + 1)}, entry * c);
    }
  }
  return out;
}

Decomposition from_witness(const PathSpace& space, const InfinitePath& gamma,
                           const InfinitePath& omega) {
  auto w = space.in_same_orbit(gamma, omega);
  if (!w) throw Error(ErrorCode::NotInOrbit, space.format(gamma) + " is not in the orbit of " +
                                                 space.format(omega));
  return {space.segment(gamma, w->m), w->l};
}

}  // namespace

Intertwiner Intertwiner::build(const Representation& a, const Representation& b,
                               std::vector<Matrix> units) {
  Intertwiner u(a, b);
  const auto& orbits_a = a.spec().orbits;
  EquivalenceVerdict verdict = unitarily_equivalent(a.spec(), b.spec());
  if (verdict.reason == "support") {
    throw Error(ErrorCode::NotInOrbit, "the representations live on different orbits");
  }
  if (verdict.reason == "multiplicity") {
    throw Error(ErrorCode::MultiplicityMismatch, "matched orbits have different multiplicities");
  }
  u.target_orbit_.assign(orbits_a.size(), 0);
  for (auto [i, j] : verdict.matched) u.target_orbit_[i] = j;

  if (units.empty()) {
    for (const OrbitSpec& o : orbits_a) units.push_back(Matrix::identity(o.multiplicity));
  }
  if (units.size() != orbits_a.size()) {
    throw Error(ErrorCode::InvalidSpec, "expected one base unitary per orbit");
  }
  for (std::size_t o = 0; o < units.size(); ++o) {
    std::size_t n = orbits_a[o].multiplicity;
    if (units[o].rows() != n || units[o].cols() != n) {
      throw Error(ErrorCode::InvalidSpec, "base unitary for orbit " + std::to_string(o + 1) +
                                              " must be " + std::to_string(n) + "x" +
                                              std::to_string(n));
    }
    if (!is_unitary(units[o])) {
      throw Error(ErrorCode::InvalidSpec,
                  "base matrix for orbit " + std::to_string(o + 1) + " is not unitary");
    }
  }
  u.units_ = std::move(units);

  for (std::size_t o = 0; o < orbits_a.size(); ++o) {
    auto id = b.locate(a.spec().orbits[o].base);
    if (!id) throw Error(ErrorCode::NotInOrbit, "base of orbit " + std::to_string(o + 1) +
                                                    " is not a point of the target");
    u.base_in_b_.push_back(*id);
  }

  for (std::size_t p : a.window_paths()) {
    std::vector<Decomposition> decs = u.decompositions(p);
    for (std::uint32_t f = 1; f <= orbits_a[a.orbit_of(p)].multiplicity; ++f) {
      IndexPoint i{p, f};
      Vec first = u.apply_via(i, decs.front());
      for (std::size_t k = 1; k < decs.size(); ++k) {
        if (u.apply_via(i, decs[k]) == first) continue;
        const KGraph& g = a.graph();
        throw Error(ErrorCode::NotWellDefined,
                    a.format(i) + ": decompositions (" + g.format(decs.front().a) + ", " +
                        decs.front().j.to_string() + ") and (" + g.format(decs[k].a) + ", " +
                        decs[k].j.to_string() + ") disagree");
      }
    }
  }
  return u;
}

Decomposition Intertwiner::decompose_source(std::size_t point) const {
  if (auto d = a_.decomposition(point)) return {d->first, d->second};
  const InfinitePath& omega = a_.spec().orbits[a_.orbit_of(point)].base;
  return from_witness(a_.space(), a_.path(point), omega);
}

Decomposition Intertwiner::decompose_target(std::size_t point, std::size_t orbit) const {
  return from_witness(b_.space(), b_.path(point), a_.spec().orbits[orbit].base);
}

std::vector<Decomposition> Intertwiner::decompositions(std::size_t point) const {
  const PathSpace& space = a_.space();
  InfinitePath gamma = a_.path(point);
  const InfinitePath& omega = a_.spec().orbits[a_.orbit_of(point)].base;
  std::vector<Decomposition> out{decompose_source(point)};
  const auto degrees = degrees_up_to(a_.spec().window);
  std::vector<InfinitePath> tails;
  for (const Degree& j : degrees) tails.push_back(space.shift(omega, j));
  for (const Degree& m : degrees) {
    InfinitePath head_tail = space.shift(gamma, m);
    for (std::size_t k = 0; k < degrees.size(); ++k) {
      if (!space.equal(head_tail, tails[k]).same()) continue;
      Decomposition d{space.segment(gamma, m), degrees[k]};
      if (d.a == out.front().a && d.j == out.front().j) continue;
      out.push_back(std::move(d));
    }
  }
  return out;
}

Vec Intertwiner::apply_via(IndexPoint i, const Decomposition& d) const {
  std::size_t o = a_.orbit_of(i.point);
  const InfinitePath& omega = a_.spec().orbits[o].base;
  Morphism head = a_.space().segment(omega, d.j);
  Vec v = a_.t(head, a_.t_star(d.a, Vec::basis(i)));
  auto base = a_.find_point(omega);
  if (!base) throw Error(ErrorCode::NotWellDefined, "base point was not interned");
  Vec w = fiber_map(a_, *base, base_in_b_[o], units_[o], v);
  return b_.t(d.a, b_.t_star(head, w));
}

Vec Intertwiner::apply(const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v.terms()) {
    out += c * apply_via(i, decompose_source(i.point));
  }
  return out;
}

Vec Intertwiner::apply_adjoint(const Vec& w) const {
  Vec out;
  for (const auto& [i, c] : w.terms()) {
    std::size_t ob = b_.orbit_of(i.point);
    std::size_t o = 0;
    while (o < target_orbit_.size() && target_orbit_[o] != ob) ++o;
    if (o == target_orbit_.size()) throw Error(ErrorCode::NotInOrbit, b_.format(i));
    const InfinitePath& omega = a_.spec().orbits[o].base;
    Decomposition d = decompose_target(i.point, o);
    Morphism head = b_.space().segment(omega, d.j);
    Vec v = b_.t(head, b_.t_star(d.a, Vec::basis(i)));
    auto base = a_.find_point(omega);
    if (!base) throw Error(ErrorCode::NotWellDefined, "base point was not interned");
    Vec back = fiber_map(b_, base_in_b_[o], *base, units_[o].adjoint(), v);
    out += c * a_.t(d.a, a_.t_star(head, back));
  }
  return out;
}

CheckReport verify_intertwiner(const Intertwiner& u, const std::vector<IndexPoint>& sample_a,
                               const std::vector<IndexPoint>& sample_b, const Degree& bound) {
  const Representation& a = u.source();
  const Representation& b = u.target();
  const KGraph& g = a.graph();
  CheckReport report;
  auto mismatch = [&](std::string instance, const Representation& rep, const Vec& lhs,
                      const Vec& rhs) {
    return [&rep, instance = std::move(instance), lhs, rhs] {
      return std::make_pair(instance, "lhs = " + rep.format(lhs) + "; rhs = " + rep.format(rhs));
    };
  };
  const auto morphisms = g.morphisms_up_to(bound);

  std::vector<InfinitePath> atoms;
  for (std::size_t p : a.window_paths()) atoms.push_back(a.path(p));

  for (IndexPoint i : sample_a) {
    Vec e = Vec::basis(i);
    Vec ue = u.apply(e);
    std::string at = " on e" + a.format(i);
    for (const Morphism& lambda : morphisms) {
      std::string tag = "l = " + g.format(lambda) + at;
      Vec lhs = u.apply(a.t(lambda, e));
      Vec rhs = b.t(lambda, ue);
      report.check("U t = t~ U", lhs == rhs, mismatch(tag, b, lhs, rhs));
      lhs = u.apply(a.t_star(lambda, e));
      rhs = b.t_star(lambda, ue);
      report.check("U t* = t~* U", lhs == rhs, mismatch(tag, b, lhs, rhs));
    }
    Vec back = u.apply_adjoint(ue);
    report.check("U*U = 1", back == e, mismatch("e" + a.format(i), a, back, e));

    auto decs = u.decompositions(i.point);
    for (std::size_t k = 1; k < decs.size(); ++k) {
      Vec other = u.apply_via(i, decs[k]);
      std::string tag = "(" + g.format(decs[k].a) + ", " + decs[k].j.to_string() + ")" + at;
      report.check("well-defined", other == ue, mismatch(tag, b, other, ue));
    }

    for (const InfinitePath& gamma : atoms) {
      SetExpr atom = SetExpr::atom(gamma);
      Vec lhs = b.pvm(atom, ue);
      Vec rhs = u.apply(a.pvm(atom, e));
      report.check("P~({g}) U = U P({g})", lhs == rhs,
                   mismatch("g = " + a.space().format(gamma) + at, b, lhs, rhs));
    }
  }

  for (IndexPoint i : sample_b) {
    Vec f = Vec::basis(i);
    Vec uf = u.apply_adjoint(f);
    for (const Morphism& lambda : morphisms) {
      Vec lhs = u.apply_adjoint(b.t(lambda, f));
      Vec rhs = a.t(lambda, uf);
      report.check("U* t~ = t U*", lhs == rhs,
                   mismatch("l = " + g.format(lambda) + " on e" + b.format(i), a, lhs, rhs));
    }
    Vec back = u.apply(uf);
    report.check("UU* = 1", back == f, mismatch("e" + b.format(i), b, back, f));
  }
  return report;
}

}  // namespace kgraph
