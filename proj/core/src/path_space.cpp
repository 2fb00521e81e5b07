#include "kgraph/path_space.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

// Smallest J with base + J·step ≥ target.
std::uint32_t repetitions(const Degree& base, const Degree& step, const Degree& target) {
  std::uint32_t j = 0;
  for (std::size_t i = 0; i < target.rank(); ++i) {
    if (target[i] <= base[i]) continue;
    std::uint32_t need = (target[i] - base[i] + step[i] - 1) / step[i];
    j = std::max(j, need);
  }
  return j;
}

Degree half(const Degree& d) {
  Degree h = d;
  for (std::size_t i = 0; i < h.rank(); ++i) h[i] /= 2;
  return h;
}

}  // namespace

std::optional<Degree> Periodicity::period() const {
  if (!periodic || !leq(n, m)) return std::nullopt;
  return m - n;
}

std::vector<std::int64_t> GroupoidWitness::lag() const {
  std::vector<std::int64_t> out(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) {
    out[i] = static_cast<std::int64_t>(m[i]) - static_cast<std::int64_t>(l[i]);
  }
  return out;
}

InfinitePath PathSpace::periodic(const Morphism& prefix, const Morphism& cycle) const {
  if (!cycle.degree().all_positive()) {
    throw Error(ErrorCode::InvalidPath,
                "cycle degree " + cycle.degree().to_string() + " has a zero coordinate");
  }
  if (cycle.range() != cycle.source()) throw Error(ErrorCode::InvalidPath, "cycle is not a loop");
  if (prefix.source() != cycle.range()) {
    throw Error(ErrorCode::SourceRangeMismatch, "prefix does not end where the cycle starts");
  }
  return normalize(PeriodicPath{prefix, cycle});
}

InfinitePath PathSpace::periodic(const Morphism& cycle) const {
  return periodic(graph_.vertex(cycle.range()), cycle);
}

InfinitePath PathSpace::lazy(std::shared_ptr<const LazySource> source) const {
  Morphism start = graph_.vertex(source->range());
  return LazyPath{std::move(start), Degree::zero(graph_.rank()), std::move(source)};
}

InfinitePath PathSpace::rematerialize(const InfinitePath& x, const Degree& source_depth) const {
  const LazyPath* p = x.lazy();
  if (!p) return x;
  return LazyPath{p->prefix, p->offset, p->source->with_depth(graph_, source_depth)};
}

std::shared_ptr<const LazySource> PathSpace::thue_morse(EdgeId e1, EdgeId e2,
                                                        std::size_t cycle_color,
                                                        const Degree& depth) const {
  const Edge& a = graph_.edge(e1);
  const Edge& b = graph_.edge(e2);
  if (a.color != b.color) throw Error(ErrorCode::InvalidSpec, "thue-morse edges differ in color");
  if (a.source != a.range || b.source != b.range || a.range != b.range) {
    throw Error(ErrorCode::InvalidSpec, "thue-morse edges must be loops at one vertex");
  }
  if (cycle_color >= graph_.rank() || cycle_color == a.color) {
    throw Error(ErrorCode::InvalidSpec, "cycle color must differ from the thue-morse color");
  }
  const VertexId v = a.range;
  std::vector<EdgeId> filler;
  auto loop_of = [&](std::size_t color) {
    for (EdgeId e : graph_.edges_into(v, color)) {
      if (graph_.edge(e).source == v) return e;
    }
    throw Error(ErrorCode::InvalidSpec, "no loop of color " + std::to_string(color + 1) + " at " +
                                            graph_.vertex_name(v));
  };
  filler.push_back(loop_of(cycle_color));
  for (std::size_t c = 0; c < graph_.rank(); ++c) {
    if (c != cycle_color && c != a.color) filler.push_back(loop_of(c));
  }
  const std::size_t block = 1 + filler.size();
  EdgeStream stream = [e1, e2, filler, block](std::size_t n) {
    std::size_t letter = n / block;
    std::size_t within = n % block;
    if (within > 0) return filler[within - 1];
    return std::popcount(letter) % 2 == 0 ? e1 : e2;
  };
  std::string label = "thue-morse(" + a.name + "," + b.name + ";" +
                      std::to_string(cycle_color + 1) + ")";
  return LazySource::create(graph_, std::move(label), std::move(stream), depth);
}

PeriodicPath PathSpace::normalize(PeriodicPath p) const {
  const std::size_t k = graph_.rank();
  bool changed = true;
  while (changed && !p.prefix.is_vertex()) {
    changed = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (p.prefix.degree()[i] == 0) continue;
      Degree unit = Degree::unit(k, i);
      auto [rho, last] = graph_.factorize(p.prefix, p.prefix.degree() - unit);
      auto [body, tail] = graph_.factorize(p.cycle, p.cycle.degree() - unit);
      if (last != tail) continue;
      // ρ'e(μ'e)^∞ = ρ'(eμ')^∞.
      p.cycle = graph_.compose(last, body);
      p.prefix = std::move(rho);
      changed = true;
      break;
    }
  }
  return p;
}

Morphism PathSpace::unroll(const PeriodicPath& p, const Degree& n) const {
  std::uint32_t j = repetitions(p.prefix.degree(), p.cycle.degree(), n);
  Morphism w = p.prefix;
  for (std::uint32_t t = 0; t < j; ++t) w = graph_.compose(w, p.cycle);
  return w;
}

Morphism PathSpace::segment(const InfinitePath& x, const Degree& n) const {
  if (n.rank() != graph_.rank()) throw Error(ErrorCode::RankMismatch, "degree " + n.to_string());
  if (const PeriodicPath* p = x.periodic()) return graph_.factorize(unroll(*p, n), n).first;
  const LazyPath& z = *x.lazy();
  if (!leq(n, *x.depth())) {
    throw Error(ErrorCode::DepthExceeded,
                n.to_string() + " beyond available depth " + x.depth()->to_string());
  }
  Degree reach = monus(n, z.prefix.degree());
  Morphism piece = graph_.segment(z.source->window(), z.offset, z.offset + reach);
  return graph_.factorize(graph_.compose(z.prefix, piece), n).first;
}

InfinitePath PathSpace::shift(const InfinitePath& x, const Degree& m) const {
  if (m.rank() != graph_.rank()) throw Error(ErrorCode::RankMismatch, "degree " + m.to_string());
  if (const PeriodicPath* p = x.periodic()) {
    Morphism w = unroll(*p, m);
    return normalize(PeriodicPath{graph_.factorize(w, m).second, p->cycle});
  }
  const LazyPath& z = *x.lazy();
  Degree t = meet(m, z.prefix.degree());
  Morphism rest = graph_.factorize(z.prefix, t).second;
  Degree more = m - t;
  Degree offset = z.offset + more;
  if (!leq(offset, z.source->depth())) {
    throw Error(ErrorCode::DepthExceeded,
                "shift " + m.to_string() + " beyond available depth " + x.depth()->to_string());
  }
  Morphism piece = graph_.segment(z.source->window(), z.offset, offset);
  Morphism joined = graph_.compose(rest, piece);
  return LazyPath{graph_.factorize(joined, more).second, std::move(offset), z.source};
}

InfinitePath PathSpace::prefix(const Morphism& lambda, const InfinitePath& x) const {
  if (lambda.source() != x.range()) {
    throw Error(ErrorCode::SourceRangeMismatch, "s(λ) = " + graph_.vertex_name(lambda.source()) +
                                                    ", r(x) = " + graph_.vertex_name(x.range()));
  }
  if (const PeriodicPath* p = x.periodic()) {
    return normalize(PeriodicPath{graph_.compose(lambda, p->prefix), p->cycle});
  }
  const LazyPath& z = *x.lazy();
  return LazyPath{graph_.compose(lambda, z.prefix), z.offset, z.source};
}

PathComparison PathSpace::equal(const InfinitePath& x, const InfinitePath& y) const {
  if (x.range() != y.range()) return {Equality::NotEqual, std::nullopt};
  if (x == y) return {Equality::Equal, std::nullopt};
  const PeriodicPath* px = x.periodic();
  const PeriodicPath* py = y.periodic();
  if (px && py) {
    // Beyond the longer prefix both are periodic with periods c1 and c2;
    // agreement on a further c1 + c2 forces equality.
    Degree n = join(px->prefix.degree(), py->prefix.degree()) + px->cycle.degree() +
               py->cycle.degree();
    bool same = segment(x, n) == segment(y, n);
    return {same ? Equality::Equal : Equality::NotEqual, std::nullopt};
  }
  Degree n = px ? *y.depth() : py ? *x.depth() : meet(*x.depth(), *y.depth());
  if (segment(x, n) != segment(y, n)) return {Equality::NotEqual, std::nullopt};
  return {Equality::EqualUpToDepth, n};
}

Periodicity PathSpace::is_aperiodic(const InfinitePath& x, const Degree& depth) const {
  if (const PeriodicPath* p = x.periodic()) {
    const Degree& start = p->prefix.degree();
    InfinitePath z = shift(x, start);
    for (const Degree& q : degrees_up_to(p->cycle.degree())) {
      if (q.is_zero()) continue;
      if (equal(shift(z, q), z).same()) return Periodicity{true, true, start + q, start, {}};
    }
    // Unreachable: the cycle degree itself is a period.
    throw Error(ErrorCode::InvalidPath, "periodic path without a period");
  }
  if (!leq(depth, *x.depth())) {
    throw Error(ErrorCode::DepthExceeded,
                depth.to_string() + " beyond available depth " + x.depth()->to_string());
  }
  Morphism window = segment(x, depth);
  auto starts = degrees_up_to(half(depth));
  for (std::size_t a = 0; a < starts.size(); ++a) {
    for (std::size_t b = a + 1; b < starts.size(); ++b) {
      const Degree& m = starts[a];
      const Degree& n = starts[b];
      Degree span = depth - join(m, n);
      if (graph_.segment(window, m, m + span) == graph_.segment(window, n, n + span)) {
        return Periodicity{true, false, n, m, depth};
      }
    }
  }
  return Periodicity{false, false, Degree::zero(graph_.rank()), Degree::zero(graph_.rank()),
                     depth};
}

std::vector<std::pair<InfinitePath, Degree>> PathSpace::tail_closure(const InfinitePath& x) const {
  const PeriodicPath* p = x.periodic();
  if (!p) throw Error(ErrorCode::Undecided, "tail closure needs a periodic path");
  const Degree& c = p->cycle.degree();
  const std::size_t k = graph_.rank();
  // Every σ^n(z) is fixed by σ^c, hence equals (its c-segment)^∞.
  auto canonical = [&](const InfinitePath& w) { return periodic(segment(w, c)); };

  std::vector<std::pair<InfinitePath, Degree>> out;
  std::map<Morphism, std::size_t> seen;
  InfinitePath z = canonical(shift(x, p->prefix.degree()));
  std::deque<std::size_t> queue;
  seen.emplace(z.periodic()->cycle, 0);
  out.emplace_back(z, Degree::zero(k));
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t at = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      InfinitePath next = canonical(shift(out[at].first, Degree::unit(k, i)));
      if (seen.count(next.periodic()->cycle)) continue;
      seen.emplace(next.periodic()->cycle, out.size());
      out.emplace_back(next, out[at].second + Degree::unit(k, i));
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

std::optional<GroupoidWitness> PathSpace::in_same_orbit(const InfinitePath& x,
                                                        const InfinitePath& y) const {
  const PeriodicPath* px = x.periodic();
  const PeriodicPath* py = y.periodic();
  if (px && py) {
    auto tx = tail_closure(x);
    auto ty = tail_closure(y);
    for (const auto& [b, sy] : ty) {
      for (const auto& [a, sx] : tx) {
        if (!equal(a, b).same()) continue;
        return GroupoidWitness{x, px->prefix.degree() + sx, y, py->prefix.degree() + sy, true};
      }
    }
    return std::nullopt;
  }
  // Semi-decision on the available segments.
  Degree dx = x.depth().value_or(*y.depth());
  Degree dy = y.depth().value_or(*x.depth());
  Degree hx = half(dx);
  Degree hy = half(dy);
  Degree span = meet(dx - hx, dy - hy);
  Morphism wx = segment(x, dx);
  Morphism wy = segment(y, dy);
  std::vector<std::pair<Degree, Morphism>> left;
  for (const Degree& m : degrees_up_to(hx)) left.emplace_back(m, graph_.segment(wx, m, m + span));
  for (const Degree& l : degrees_up_to(hy)) {
    Morphism right = graph_.segment(wy, l, l + span);
    for (const auto& [m, seg] : left) {
      if (seg == right) return GroupoidWitness{x, m, y, l, false};
    }
  }
  throw Error(ErrorCode::Undecided, "no shift match within depth " + dx.to_string() + " and " +
                                        dy.to_string());
}

bool PathSpace::check_witness(const GroupoidWitness& w) const {
  return equal(shift(w.x, w.m), shift(w.y, w.l)).same();
}

std::vector<InfinitePath> PathSpace::orbit_enumerate(const InfinitePath& omega,
                                                     const Degree& bound) const {
  std::vector<InfinitePath> out;
  for (OrbitMember& m : orbit_members(omega, bound)) out.push_back(std::move(m.path));
  return out;
}

std::vector<OrbitMember> PathSpace::orbit_members(const InfinitePath& omega, const Degree& bound,
                                                  bool distinct) const {
  Degree key = bound + Degree::filled(graph_.rank(), 1);
  if (omega.is_lazy()) {
    Degree available = *omega.depth();
    if (!leq(bound, available)) {
      throw Error(ErrorCode::DepthExceeded, "orbit bound " + bound.to_string() +
                                                " beyond depth " + available.to_string());
    }
    key = meet(key, available - bound);
  }
  // Distinct tails first: far fewer than the shifts when ω is periodic.
  PathCatalog tail_set(*this, key);
  std::vector<std::pair<InfinitePath, Degree>> tails;
  for (const Degree& j : degrees_up_to(bound)) {
    InfinitePath tail = shift(omega, j);
    if (tail_set.insert(tail).second || !distinct) tails.emplace_back(std::move(tail), j);
  }

  PathCatalog seen(*this, key);
  std::vector<OrbitMember> out;
  for (const Degree& n : degrees_up_to(bound)) {
    std::vector<std::vector<Morphism>> by_source(graph_.vertex_count());
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      for (Morphism& a : graph_.enumerate(v, n)) by_source[a.source()].push_back(std::move(a));
    }
    for (const auto& [tail, j] : tails) {
      for (const Morphism& a : by_source[tail.range()]) {
        InfinitePath x = prefix(a, tail);
        if (distinct && !seen.insert(x).second) continue;
        out.push_back(OrbitMember{std::move(x), a, j});
      }
    }
  }
  return out;
}

std::vector<InfinitePath> PathSpace::ep_paths(const Degree& prefix_bound,
                                              const Degree& cycle_bound) const {
  PathCatalog out(*this, prefix_bound + Degree::filled(graph_.rank(), 1));
  auto prefixes = graph_.morphisms_up_to(prefix_bound);
  for (const Degree& c : degrees_up_to(cycle_bound)) {
    if (!c.all_positive()) continue;
    for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
      for (const Morphism& cycle : graph_.enumerate(v, c)) {
        if (cycle.source() != v) continue;
        for (const Morphism& rho : prefixes) {
          if (rho.source() == v) out.insert(periodic(rho, cycle));
        }
      }
    }
  }
  return out.paths();
}

std::string PathSpace::format(const InfinitePath& x) const {
  if (const PeriodicPath* p = x.periodic()) {
    std::string cycle = graph_.format(p->cycle) + "^inf";
    if (p->prefix.is_vertex()) return cycle;
    return graph_.format(p->prefix) + " " + cycle;
  }
  const LazyPath& z = *x.lazy();
  std::string out;
  if (!z.prefix.is_vertex()) out = graph_.format(z.prefix) + " ";
  if (!z.offset.is_zero()) out += "shift" + z.offset.to_string() + " ";
  return out + z.source->label();
}

std::optional<std::size_t> PathCatalog::find_in(const std::vector<std::size_t>& bucket,
                                                const InfinitePath& x) const {
  for (std::size_t i : bucket) {
    if (space_->equal(paths_[i], x).same()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PathCatalog::find(const InfinitePath& x) const {
  auto it = buckets_.find(space_->segment(x, key_depth_));
  if (it == buckets_.end()) return std::nullopt;
  return find_in(it->second, x);
}

std::pair<std::size_t, bool> PathCatalog::insert(const InfinitePath& x) {
  auto& bucket = buckets_[space_->segment(x, key_depth_)];
  if (auto i = find_in(bucket, x)) return {*i, false};
  paths_.push_back(x);
  bucket.push_back(paths_.size() - 1);
  return {paths_.size() - 1, true};
}

}  // namespace kgraph
