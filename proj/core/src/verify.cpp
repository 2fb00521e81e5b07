#include "kgraph/verify.hpp"

#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

void CheckReport::check(const std::string& relation, bool ok,
                        const std::function<std::pair<std::string, std::string>()>& describe) {
  Tally& t = tallies_[relation];
  if (ok) {
    ++t.passed;
    return;
  }
  ++t.failed;
  auto [instance, witness] = describe();
  failures_.push_back({relation, std::move(instance), std::move(witness)});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& [name, t] : other.tallies_) {
    tallies_[name].passed += t.passed;
    tallies_[name].failed += t.failed;
  }
  failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

std::size_t CheckReport::instances() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tallies_) n += t.passed + t.failed;
  return n;
}

namespace {

struct Context {
  const Representation& rep;
  const KGraph& g;
  std::vector<Morphism> morphisms;

  Context(const Representation& r, const Degree& bound)
      : rep(r), g(r.graph()), morphisms(r.graph().morphisms_up_to(bound)) {}

  std::string m(const Morphism& x) const { return g.format(x); }
  std::string v(const Vec& x) const { return rep.format(x); }
  std::string e(IndexPoint i) const { return "e" + rep.format(i); }
  std::function<std::pair<std::string, std::string>()> mismatch(std::string instance,
                                                                const Vec& lhs,
                                                                const Vec& rhs) const {
    return [this, instance = std::move(instance), lhs, rhs] {
      return std::make_pair(instance, "lhs = " + v(lhs) + "; rhs = " + v(rhs));
    };
  }
};

}  // namespace

CheckReport verify_ck(const Representation& rep, const std::vector<IndexPoint>& sample,
                      const Degree& bound) {
  Context c(rep, bound);
  CheckReport report;
  const std::size_t nv = c.g.vertex_count();

  std::map<std::pair<std::size_t, std::size_t>, std::vector<MinimalExtension>> minimal;
  for (std::size_t a = 0; a < c.morphisms.size(); ++a) {
    for (std::size_t b = 0; b < c.morphisms.size(); ++b) {
      if (c.morphisms[a].range() != c.morphisms[b].range()) continue;
      minimal.emplace(std::make_pair(a, b), c.g.lambda_min(c.morphisms[a], c.morphisms[b]));
    }
  }

  for (IndexPoint i : sample) {
    Vec e = Vec::basis(i);
    for (VertexId v = 0; v < nv; ++v) {
      Morphism pv = c.g.vertex(v);
      Vec tv = rep.t(pv, e);
      std::string at = c.g.vertex_name(v) + " on " + c.e(i);
      report.check("CK1", tv == rep.t_star(pv, e), c.mismatch("t_v = t_v* at " + at, tv, rep.t_star(pv, e)));
      report.check("CK1", rep.t(pv, tv) == tv, c.mismatch("t_v t_v = t_v at " + at, rep.t(pv, tv), tv));
      for (VertexId w = 0; w < nv; ++w) {
        if (w == v) continue;
        Vec both = rep.t(c.g.vertex(w), tv);
        report.check("CK1", both.is_zero(),
                     c.mismatch("t_w t_v = 0 for w = " + c.g.vertex_name(w) + ", v = " + at, both, {}));
      }
    }

    for (const Morphism& lambda : c.morphisms) {
      Vec lhs = rep.t_star(lambda, rep.t(lambda, e));
      Vec rhs = rep.t(c.g.vertex(lambda.source()), e);
      report.check("CK3", lhs == rhs,
                   c.mismatch("t*_l t_l = t_s(l), l = " + c.m(lambda) + " on " + c.e(i), lhs, rhs));
      for (const Morphism& eta : c.morphisms) {
        if (lambda.source() != eta.range()) continue;
        Vec two = rep.t(lambda, rep.t(eta, e));
        Vec one = rep.t(c.g.compose(lambda, eta), e);
        report.check("CK2", two == one,
                     c.mismatch("t_l t_h = t_lh, l = " + c.m(lambda) + ", h = " + c.m(eta) +
                                    " on " + c.e(i),
                                two, one));
      }
    }

    for (VertexId v = 0; v < nv; ++v) {
      Vec tv = rep.t(c.g.vertex(v), e);
      for (const Degree& n : degrees_up_to(bound)) {
        Vec sum;
        for (const Morphism& lambda : c.g.enumerate(v, n)) sum += rep.t(lambda, rep.t_star(lambda, e));
        report.check("CK4", sum == tv,
                     c.mismatch("sum over " + c.g.vertex_name(v) + "L^" + n.to_string() + " on " +
                                    c.e(i),
                                sum, tv));
      }
    }

    for (const auto& [pair, exts] : minimal) {
      const Morphism& lambda = c.morphisms[pair.first];
      const Morphism& eta = c.morphisms[pair.second];
      Vec lhs = rep.t_star(lambda, rep.t(eta, e));
      Vec rhs;
      for (const MinimalExtension& m : exts) rhs += rep.t(m.alpha, rep.t_star(m.beta, e));
      report.check("CK4-min", lhs == rhs,
                   c.mismatch("t*_l t_h = sum t_a t*_b, l = " + c.m(lambda) + ", h = " +
                                  c.m(eta) + " on " + c.e(i),
                              lhs, rhs));
    }
  }
  return report;
}

CheckReport verify_pvm_identities(const Representation& rep, const std::vector<IndexPoint>& sample,
                                  const Degree& bound) {
  Context c(rep, bound);
  CheckReport report;
  const auto degrees = degrees_up_to(bound);

  // Each sample is paired with the atoms at its own path and its shifts
  // (where the identities have nonzero sides) and at one unrelated path.
  std::vector<std::size_t> points;
  std::map<std::size_t, std::size_t> slot;
  for (IndexPoint i : sample) {
    if (slot.emplace(i.point, points.size()).second) points.push_back(i.point);
  }

  for (IndexPoint i : sample) {
    Vec e = Vec::basis(i);
    for (const Morphism& lambda : c.morphisms) {
      for (const Morphism& eta : c.morphisms) {
        SetExpr z = SetExpr::cylinder(eta);
        std::string tag = "l = " + c.m(lambda) + ", h = " + c.m(eta) + " on " + c.e(i);
        if (lambda.source() == eta.range()) {
          Vec lhs = rep.t(lambda, rep.pvm(z, rep.t_star(lambda, e)));
          Vec rhs = rep.pvm(SetExpr::prefix_image(lambda, z), e);
          report.check("PVM(a)", lhs == rhs, c.mismatch(tag, lhs, rhs));
          Vec direct = rep.pvm(SetExpr::cylinder(c.g.compose(lambda, eta)), e);
          report.check("PVM(a) image", rhs == direct, c.mismatch(tag, rhs, direct));
        }
        if (lambda.range() == eta.range()) {
          SetExpr pre = SetExpr::prefix_preimage(lambda, z);
          Vec lhs = rep.t(lambda, rep.pvm(pre, e));
          Vec rhs = rep.pvm(z, rep.t(lambda, e));
          report.check("PVM(c)", lhs == rhs, c.mismatch(tag, lhs, rhs));
          std::vector<SetExpr> pieces;
          for (const MinimalExtension& m : c.g.lambda_min(lambda, eta)) {
            pieces.push_back(SetExpr::cylinder(m.alpha));
          }
          Vec via_min = rep.pvm(SetExpr::unite(std::move(pieces)), e);
          Vec via_pre = rep.pvm(pre, e);
          report.check("PVM(c) preimage", via_min == via_pre, c.mismatch(tag, via_pre, via_min));
        }
        Vec lhs = rep.t(lambda, rep.pvm(z, e));
        Vec rhs = rep.pvm(SetExpr::shift_preimage(lambda.degree(), z), rep.t(lambda, e));
        report.check("PVM(d)", lhs == rhs, c.mismatch(tag, lhs, rhs));
      }
    }

    for (const Morphism& eta : c.morphisms) {
      SetExpr z = SetExpr::cylinder(eta);
      for (const Degree& n : degrees) {
        Vec sum;
        for (const Morphism& lambda : c.g.enumerate(eta.range(), n)) {
          sum += rep.t(lambda, rep.pvm(SetExpr::prefix_preimage(lambda, z), rep.t_star(lambda, e)));
        }
        Vec rhs = rep.pvm(z, e);
        report.check("PVM(b)", sum == rhs,
                     c.mismatch("h = " + c.m(eta) + ", n = " + n.to_string() + " on " + c.e(i),
                                sum, rhs));
      }
    }

    InfinitePath x = rep.path(i.point);
    std::vector<InfinitePath> omegas{x, rep.path(points[(slot.at(i.point) + 1) % points.size()])};
    for (const Degree& n : degrees) omegas.push_back(rep.space().shift(x, n));
    for (const InfinitePath& omega : omegas) {
      SetExpr atom = SetExpr::atom(omega);
      std::string name = rep.space().format(omega);
      for (const Morphism& lambda : c.morphisms) {
        std::string tag = "w = " + name + ", l = " + c.m(lambda) + " on " + c.e(i);
        if (lambda.source() == omega.range()) {
          Vec lhs = rep.t(lambda, rep.pvm(atom, rep.t_star(lambda, e)));
          Vec rhs = rep.pvm(SetExpr::atom(rep.space().prefix(lambda, omega)), e);
          report.check("atom prefix", lhs == rhs, c.mismatch(tag, lhs, rhs));
        }
        if (lambda.range() == omega.range() &&
            rep.space().segment(omega, lambda.degree()) != lambda) {
          Vec lhs = rep.t_star(lambda, rep.pvm(atom, rep.t(lambda, e)));
          report.check("atom orthogonal", lhs.is_zero(), c.mismatch(tag, lhs, {}));
        }
      }
      for (const Degree& n : degrees) {
        Morphism head = rep.space().segment(omega, n);
        Vec lhs = rep.t_star(head, rep.pvm(atom, rep.t(head, e)));
        Vec rhs = rep.pvm(SetExpr::atom(rep.space().shift(omega, n)), e);
        report.check("atom shift", lhs == rhs,
                     c.mismatch("w = " + name + ", n = " + n.to_string() + " on " + c.e(i), lhs,
                                rhs));
      }
    }
  }
  return report;
}

CheckReport verify_purely_atomic(const Representation& rep) {
  CheckReport report;
  const PathSpace& space = rep.space();
  const auto& orbits = rep.spec().orbits;

  std::map<Morphism, std::vector<std::size_t>> buckets;
  for (std::size_t p : rep.window_paths()) {
    InfinitePath x = rep.path(p);
    std::string name = space.format(x);
    auto dec = rep.decomposition(p);
    const InfinitePath& base = orbits[rep.orbit_of(p)].base;
    bool in_orbit = dec && space.check_witness(GroupoidWitness{x, dec->first.degree(), base, dec->second,
                                                               !x.is_lazy()});
    report.check("orbit membership", in_orbit, [&] {
      return std::make_pair(name, "no decomposition a.shift^j(base) reproduces the path");
    });
    std::uint32_t dim = rep.atom_dimension(x);
    report.check("nonzero atom", dim > 0, [&] { return std::make_pair(name, "dim P({x}) = 0"); });
    buckets[space.segment(x, rep.resolution())].push_back(p);
  }

  // Σ_x P({x}) e_i = e_i: exactly one window atom contains each basis path.
  for (const IndexPoint& i : rep.window()) {
    InfinitePath x = rep.path(i.point);
    std::size_t hits = 0;
    for (std::size_t q : buckets[space.segment(x, rep.resolution())]) {
      if (space.equal(rep.path(q), x).same()) ++hits;
    }
    report.check("atoms sum to identity", hits == 1, [&] {
      return std::make_pair("e" + rep.format(i),
                            std::to_string(hits) + " atoms contain the basis path");
    });
  }
  return report;
}

CheckReport verify_permutative(const Representation& rep, const std::vector<IndexPoint>& sample,
                               const Degree& bound) {
  Context c(rep, bound);
  CheckReport report;
  const PathSpace& space = rep.space();

  for (const Morphism& lambda : c.morphisms) {
    std::map<IndexPoint, IndexPoint> images;
    for (IndexPoint i : sample) {
      auto j = rep.sigma(lambda, i);
      if (!j) continue;
      auto [it, fresh] = images.emplace(*j, i);
      report.check("sigma injective", fresh, [&, i, j] {
        return std::make_pair("l = " + c.m(lambda), c.e(i) + " and " + c.e(it->second) +
                                                        " both map to " + c.e(*j));
      });
      report.check("sigma into K", rep.in_K(lambda, *j), [&, i, j] {
        return std::make_pair("l = " + c.m(lambda) + " on " + c.e(i),
                              "image " + c.e(*j) + " is not in K_l");
      });
      IndexPoint back = rep.coding(lambda.degree(), *j);
      report.check("coding after sigma", back == i, [&, i, back] {
        return std::make_pair("l = " + c.m(lambda) + " on " + c.e(i), "returns " + c.e(back));
      });
    }
  }

  for (IndexPoint i : sample) {
    for (const Morphism& lambda : c.morphisms) {
      for (const Morphism& nu : c.morphisms) {
        if (lambda.source() != nu.range() || !rep.in_J(nu, i)) continue;
        auto step = rep.sigma(nu, i);
        bool inside = step && rep.in_J(lambda, *step);
        auto two = inside ? rep.sigma(lambda, *step) : std::nullopt;
        auto one = rep.sigma(c.g.compose(lambda, nu), i);
        report.check("sigma composition", inside && two == one, [&, i] {
          return std::make_pair("l = " + c.m(lambda) + ", n = " + c.m(nu) + " on " + c.e(i),
                                "composite and product images differ");
        });
      }
    }

    for (const Degree& n : degrees_up_to(bound)) {
      std::size_t in_k = 0;
      std::size_t in_j = 0;
      for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
        for (const Morphism& lambda : c.g.enumerate(v, n)) {
          if (rep.in_K(lambda, i)) {
            ++in_k;
            IndexPoint down = rep.coding(n, i);
            auto up = rep.sigma(lambda, down);
            report.check("sigma after coding", up && *up == i, [&, i] {
              return std::make_pair("l = " + c.m(lambda) + " on " + c.e(i),
                                    "sigma_l(coding) does not return the point");
            });
          }
          if (rep.in_J(lambda, i)) ++in_j;
        }
      }
      report.check("K partition", in_k == 1, [&, i] {
        return std::make_pair(c.e(i) + ", n = " + n.to_string(),
                              "lies in " + std::to_string(in_k) + " sets K_l");
      });
      report.check("J cover", in_j >= 1, [&, i] {
        return std::make_pair(c.e(i) + ", n = " + n.to_string(), "lies in no J_l");
      });

      InfinitePath x = rep.path(i.point);
      Morphism code = rep.encoding(i, n);
      report.check("encoding segment", code == space.segment(x, n), [&, i] {
        return std::make_pair(c.e(i) + ", n = " + n.to_string(),
                              "E(i)(0,n) = " + c.m(code));
      });
      for (const Degree& m : degrees_up_to(bound)) {
        Morphism lhs = rep.encoding(rep.coding(n, i), m);
        Morphism rhs = space.segment(space.shift(x, n), m);
        report.check("encoding shift", lhs == rhs, [&, i] {
          return std::make_pair(c.e(i) + ", n = " + n.to_string() + ", m = " + m.to_string(),
                                c.m(lhs) + " vs " + c.m(rhs));
        });
      }
    }

    InfinitePath x = rep.path(i.point);
    for (const Morphism& lambda : c.morphisms) {
      auto j = rep.sigma(lambda, i);
      if (!j) continue;
      InfinitePath image = space.prefix(lambda, x);
      for (const Degree& m : degrees_up_to(bound)) {
        Morphism lhs = rep.encoding(*j, m);
        Morphism rhs = space.segment(image, m);
        report.check("encoding prefix", lhs == rhs, [&, i] {
          return std::make_pair("l = " + c.m(lambda) + ", m = " + m.to_string() + " on " + c.e(i),
                                c.m(lhs) + " vs " + c.m(rhs));
        });
      }
    }
  }
  return report;
}

CheckReport as_semibranching(const Representation& rep, const std::vector<IndexPoint>& sample,
                             const Degree& bound) {
  Context c(rep, bound);
  CheckReport report;
  const auto degrees = degrees_up_to(bound);

  // (a) per degree: ranges cover and are disjoint, Φ = |K|/|J| = 1, coding inverts prefixing.
  for (const Degree& n : degrees) {
    for (IndexPoint i : sample) {
      std::size_t hits = 0;
      for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
        for (const Morphism& lambda : c.g.enumerate(v, n)) hits += rep.in_K(lambda, i) ? 1 : 0;
      }
      report.check("SBFS(a) ranges", hits == 1, [&, i] {
        return std::make_pair(c.e(i) + ", n = " + n.to_string(),
                              "in " + std::to_string(hits) + " range sets");
      });
    }
    for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
      for (const Morphism& lambda : c.g.enumerate(v, n)) {
        std::set<IndexPoint> domain, range;
        for (IndexPoint i : sample) {
          auto j = rep.sigma(lambda, i);
          if (!j) continue;
          domain.insert(i);
          range.insert(*j);
          report.check("SBFS(a) coding", rep.coding(n, *j) == i, [&, i] {
            return std::make_pair("l = " + c.m(lambda) + " on " + c.e(i),
                                  "coding map does not invert prefixing");
          });
        }
        report.check("SBFS(a) derivative", domain.size() == range.size(), [&] {
          return std::make_pair("l = " + c.m(lambda),
                                std::to_string(range.size()) + "/" + std::to_string(domain.size()));
        });
      }
    }
  }

  // (b) τ_v = id on D_v and μ(D_v) > 0.
  for (VertexId v = 0; v < c.g.vertex_count(); ++v) {
    Morphism pv = c.g.vertex(v);
    std::size_t size = 0;
    for (IndexPoint i : rep.window()) {
      if (!rep.in_J(pv, i)) continue;
      ++size;
      report.check("SBFS(b) identity", rep.sigma(pv, i) == i, [&, i] {
        return std::make_pair(c.g.vertex_name(v) + " on " + c.e(i), "tau_v moves the point");
      });
    }
    report.check("SBFS(b) measure", size > 0, [&] {
      return std::make_pair(c.g.vertex_name(v), "D_v is empty in the window");
    });
  }

  // (c) R_ν ⊆ D_λ and τ_λ τ_ν = τ_λν.
  for (IndexPoint i : sample) {
    for (const Morphism& lambda : c.morphisms) {
      for (const Morphism& nu : c.morphisms) {
        if (lambda.source() != nu.range()) continue;
        auto step = rep.sigma(nu, i);
        if (!step) continue;
        bool in_domain = rep.in_J(lambda, *step);
        report.check("SBFS(c) ranges", in_domain, [&, i] {
          return std::make_pair("l = " + c.m(lambda) + ", n = " + c.m(nu) + " on " + c.e(i),
                                "R_n is not inside D_l");
        });
        if (!in_domain) continue;
        bool same = rep.sigma(lambda, *step) == rep.sigma(c.g.compose(lambda, nu), i);
        report.check("SBFS(c) composition", same, [&, i] {
          return std::make_pair("l = " + c.m(lambda) + ", n = " + c.m(nu) + " on " + c.e(i),
                                "tau_l tau_n != tau_ln");
        });
      }
    }
    // (d) τ^m τ^n = τ^{m+n}.
    for (const Degree& m : degrees) {
      for (const Degree& n : degrees) {
        IndexPoint two = rep.coding(m, rep.coding(n, i));
        IndexPoint one = rep.coding(m + n, i);
        report.check("SBFS(d) coding", two == one, [&, i] {
          return std::make_pair(c.e(i) + ", m = " + m.to_string() + ", n = " + n.to_string(),
                                c.e(two) + " vs " + c.e(one));
        });
      }
    }
  }
  return report;
}

}  // namespace kgraph
