#include "kgraph/representation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "kgraph/error.hpp"

namespace kgraph {

struct Representation::Impl {
  AtomicRepSpec spec;
  PathSpace space;
  Degree resolution;
  std::vector<IndexPoint> window;
  std::vector<std::size_t> window_paths;

  mutable std::recursive_mutex mutex;
  mutable PathCatalog catalog;
  mutable std::vector<std::size_t> orbit;
  mutable std::map<std::pair<Morphism, std::size_t>, std::size_t> prefix_cache;
  mutable std::map<std::pair<Degree, std::size_t>, std::size_t> shift_cache;
  mutable std::map<std::pair<std::size_t, Degree>, Morphism> segment_cache;
  // edge -> (i1, i2) whose t_e images are exchanged.
  std::map<EdgeId, std::pair<IndexPoint, IndexPoint>> swaps;
  std::map<std::size_t, std::pair<Morphism, Degree>> decompositions;

  Impl(AtomicRepSpec s, Degree res)
      : spec(std::move(s)), space(spec.graph), resolution(res), catalog(space, res) {}

  template <class F>
  auto guarded(F&& f) const {
    try {
      return f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DepthExceeded) throw;
      throw Error(ErrorCode::WindowExceeded, e.what());
    }
  }

  std::size_t intern(const InfinitePath& x, std::size_t orbit_index) const {
    std::lock_guard lock(mutex);
    auto [id, inserted] = catalog.insert(x);
    if (inserted) orbit.push_back(orbit_index);
    return id;
  }

  Morphism segment(std::size_t point, const Degree& n) const {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(point, n);
    if (auto it = segment_cache.find(key); it != segment_cache.end()) return it->second;
    Morphism m = guarded([&] { return space.segment(catalog.at(point), n); });
    segment_cache.emplace(key, m);
    return m;
  }

  std::size_t prefixed(const Morphism& lambda, std::size_t point) const {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(lambda, point);
    if (auto it = prefix_cache.find(key); it != prefix_cache.end()) return it->second;
    std::size_t id =
        guarded([&] { return intern(space.prefix(lambda, catalog.at(point)), orbit[point]); });
    prefix_cache.emplace(key, id);
    return id;
  }

  std::size_t shifted(const Degree& n, std::size_t point) const {
    std::lock_guard lock(mutex);
    auto key = std::make_pair(n, point);
    if (auto it = shift_cache.find(key); it != shift_cache.end()) return it->second;
    std::size_t id =
        guarded([&] { return intern(space.shift(catalog.at(point), n), orbit[point]); });
    shift_cache.emplace(key, id);
    return id;
  }
};

namespace {

Degree lazy_depth(const Degree& window, const Degree& resolution) {
  return 6u * window + resolution + Degree::filled(window.rank(), 2);
}

}  // namespace

Representation::Representation(AtomicRepSpec spec) {
  if (spec.window.rank() != spec.graph.rank()) {
    throw Error(ErrorCode::RankMismatch, "window " + spec.window.to_string());
  }
  for (const SpecIssue& issue : check_spec(spec)) {
    if (issue.kind != SpecIssue::Kind::Undecided) throw Error(ErrorCode::InvalidSpec, issue.message);
  }
  Degree resolution = spec.window + Degree::filled(spec.graph.rank(), 1);
  impl_ = std::make_shared<Impl>(std::move(spec), resolution);
  Impl& s = *impl_;
  for (OrbitSpec& o : s.spec.orbits) {
    if (o.base.is_lazy()) o.base = s.space.rematerialize(o.base, lazy_depth(s.spec.window, resolution));
  }

  for (std::size_t o = 0; o < s.spec.orbits.size(); ++o) {
    const OrbitSpec& orbit = s.spec.orbits[o];
    for (const OrbitMember& m : s.space.orbit_members(orbit.base, s.spec.window)) {
      std::size_t before = s.catalog.size();
      std::size_t id = s.intern(m.path, o);
      if (id < before) continue;
      s.window_paths.push_back(id);
      s.decompositions.emplace(id, std::make_pair(m.a, m.j));
      for (std::uint32_t f = 1; f <= orbit.multiplicity; ++f) s.window.push_back({id, f});
    }
  }

  for (EdgeId e : s.spec.swap_mutations) {
    Morphism lambda = s.spec.graph.edge_morphism(e);
    std::vector<IndexPoint> domain;
    for (const IndexPoint& i : s.window) {
      if (in_J(lambda, i)) domain.push_back(i);
      if (domain.size() == 2) break;
    }
    if (domain.size() < 2) {
      throw Error(ErrorCode::InvalidSpec,
                  "mutation on " + s.spec.graph.edge(e).name + " needs two window points");
    }
    s.swaps[e] = {domain[0], domain[1]};
  }
}

const AtomicRepSpec& Representation::spec() const { return impl_->spec; }
const KGraph& Representation::graph() const { return impl_->spec.graph; }
const PathSpace& Representation::space() const { return impl_->space; }
const std::vector<IndexPoint>& Representation::window() const { return impl_->window; }
const std::vector<std::size_t>& Representation::window_paths() const {
  return impl_->window_paths;
}
const Degree& Representation::resolution() const { return impl_->resolution; }

InfinitePath Representation::path(std::size_t point) const {
  std::lock_guard lock(impl_->mutex);
  return impl_->catalog.at(point);
}

std::size_t Representation::orbit_of(std::size_t point) const {
  std::lock_guard lock(impl_->mutex);
  return impl_->orbit.at(point);
}

std::size_t Representation::point_count() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->catalog.size();
}

std::optional<std::size_t> Representation::find_point(const InfinitePath& x) const {
  std::lock_guard lock(impl_->mutex);
  return impl_->guarded([&] { return impl_->catalog.find(x); });
}

std::optional<std::size_t> Representation::locate(const InfinitePath& x) const {
  if (auto id = find_point(x)) return id;
  for (std::size_t o = 0; o < impl_->spec.orbits.size(); ++o) {
    if (impl_->space.in_same_orbit(x, impl_->spec.orbits[o].base)) {
      return impl_->guarded([&] { return impl_->intern(x, o); });
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Morphism, Degree>> Representation::decomposition(std::size_t point) const {
  auto it = impl_->decompositions.find(point);
  if (it == impl_->decompositions.end()) return std::nullopt;
  return it->second;
}

bool Representation::in_J(const Morphism& lambda, IndexPoint i) const {
  return lambda.source() == path(i.point).range();
}

bool Representation::in_K(const Morphism& lambda, IndexPoint i) const {
  if (lambda.range() != path(i.point).range()) return false;
  return impl_->segment(i.point, lambda.degree()) == lambda;
}

std::optional<IndexPoint> Representation::sigma(const Morphism& lambda, IndexPoint i) const {
  if (!in_J(lambda, i)) return std::nullopt;
  if (lambda.edges().size() == 1) {
    auto it = impl_->swaps.find(lambda.edges().front());
    if (it != impl_->swaps.end()) {
      if (i == it->second.first) i = it->second.second;
      else if (i == it->second.second) i = it->second.first;
    }
  }
  return IndexPoint{impl_->prefixed(lambda, i.point), i.fiber};
}

IndexPoint Representation::coding(const Degree& n, IndexPoint i) const {
  return IndexPoint{impl_->shifted(n, i.point), i.fiber};
}

Vec Representation::t(const Morphism& lambda, const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v.terms()) {
    if (auto j = sigma(lambda, i)) out.add(*j, c);
  }
  return out;
}

Vec Representation::t_star(const Morphism& lambda, const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v.terms()) {
    if (in_K(lambda, i)) out.add(coding(lambda.degree(), i), c);
  }
  return out;
}

bool Representation::contains(const SetExpr& s, IndexPoint i) const {
  InfinitePath x = path(i.point);
  return impl_->guarded([&] { return s.contains(impl_->space, x); });
}

Vec Representation::pvm(const SetExpr& s, const Vec& v) const {
  Vec out;
  for (const auto& [i, c] : v.terms()) {
    if (contains(s, i)) out.add(i, c);
  }
  return out;
}

std::uint32_t Representation::atom_dimension(const InfinitePath& x) const {
  if (auto id = find_point(x)) return impl_->spec.orbits[orbit_of(*id)].multiplicity;
  for (const OrbitSpec& o : impl_->spec.orbits) {
    if (impl_->space.in_same_orbit(x, o.base)) return o.multiplicity;
  }
  return 0;
}

Morphism Representation::encoding(IndexPoint i, const Degree& n) const {
  // i ∈ K_λ iff path(i)(0, n) = λ, so the segment is the unique λ ∈ Λ^n
  // whose K set contains i.
  return impl_->segment(i.point, n);
}

std::string Representation::format(IndexPoint i) const {
  return "(" + impl_->space.format(path(i.point)) + ", " + std::to_string(i.fiber) + ")";
}

std::string Representation::format(const Vec& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    if (!(c == Scalar(1))) out += c.to_string() + "*";
    out += "e" + format(i);
  }
  return out;
}

std::vector<IndexPoint> sample_points(const Representation& rep, std::size_t limit) {
  const auto& all = rep.window();
  if (all.size() <= limit) return all;
  std::vector<IndexPoint> out;
  std::mt19937 rng(0x6b677261u);
  std::sample(all.begin(), all.end(), std::back_inserter(out), limit, rng);
  return out;
}

}  // namespace kgraph
