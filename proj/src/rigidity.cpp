#include "gbsr/rigidity.hpp"

#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbsr {

std::string_view to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::Collapsible: return "collapsible";
    case ViolationKind::Slide: return "slide";
    case ViolationKind::ExpandSlide: return "expand-slide";
    case ViolationKind::Induction: return "induction";
  }
  return "unknown";
}

std::optional<EdgeEnd> collapse_witness(const Graph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).is_loop()) continue;
    for (Side s : {Side::A, Side::B})
      if (g.edge(e).at(s).label == 1) return EdgeEnd{e, s};
  }
  return std::nullopt;
}

bool is_reduced(const Graph& g) { return !collapse_witness(g).has_value(); }

std::optional<Label> ascending_index(const Graph& g) {
  if (g.vertex_count() != 1 || g.edge_count() != 1) return std::nullopt;
  const Edge& loop = g.edge(0);
  if (loop.at(Side::A).label == 1) return loop.at(Side::B).label;
  if (loop.at(Side::B).label == 1) return loop.at(Side::A).label;
  return std::nullopt;
}

bool is_ascending(const Graph& g) {
  if (!is_reduced(g)) throw Error(ErrorCode::NotReduced, "ascending test needs a reduced graph");
  return ascending_index(g).has_value();
}

std::optional<std::pair<EdgeEnd, EdgeEnd>> divisibility_witness(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (EdgeEnd e : g.ends_at(v))
      for (EdgeEnd f : g.ends_at(v))
        if (e != f && g.label(e) % g.label(f) == 0) return std::pair{e, f};
  }
  return std::nullopt;
}

bool is_strongly_slide_free(const Graph& g) { return !divisibility_witness(g).has_value(); }

RigidityVerdict edge_pair_rigid(const Graph& g) {
  if (!is_reduced(g)) throw Error(ErrorCode::NotReduced, "rigidity criterion needs a reduced graph");
  if (ascending_index(g)) throw Error(ErrorCode::AscendingCase, "ascending loops are decided arithmetically");

  RigidityVerdict v;
  v.reduced = true;
  v.ascending = false;
  v.strongly_slide_free = is_strongly_slide_free(g);

  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const auto ends = g.ends_at(x);
    for (EdgeEnd e : ends) {
      for (EdgeEnd f : ends) {
        if (e == f || g.label(e) % g.label(f) != 0) continue;
        const Edge& fe = g.edge(f.edge);
        const bool same_loop = e.edge == f.edge;
        // e and f-bar in one orbit with equal edge groups.
        if (same_loop && g.label(e) == g.label(f)) continue;
        // f on a (1,1) loop, and only three ends at the vertex.
        if (fe.is_loop() && fe.at(Side::A).label == 1 && fe.at(Side::B).label == 1 && ends.size() == 3) continue;
        v.violations.push_back({x, e, f, same_loop ? ViolationKind::ExpandSlide : ViolationKind::Slide, 0});
      }
    }
  }
  v.rigid = v.violations.empty();
  return v;
}

namespace {

bool is_prime(Label n) {
  if (n < 2) return false;
  for (Label q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

bool is_power_of(Label d, Label n) {
  if (d == 1) return true;
  if (n == 1) return false;
  boost::multiprecision::cpp_int p = n;
  while (p < d) p *= n;
  return p == d;
}

}  // namespace

bool ascending_rigid(Label n) { return n == 1 || is_prime(n); }

bool divisors_are_powers(Label n) {
  for (Label d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (!is_power_of(d, n) || !is_power_of(n / d, n)) return false;
  }
  return true;
}

RigidityVerdict check(const Graph& g) {
  RigidityVerdict v;
  if (auto w = collapse_witness(g)) {
    v.reduced = false;
    v.rigid = false;
    v.strongly_slide_free = is_strongly_slide_free(g);
    v.collapse_witness = w;
    v.violations.push_back({g.origin(*w), *w, w->other(), ViolationKind::Collapsible, 0});
    return v;
  }
  if (auto n = ascending_index(g)) {
    v.reduced = true;
    v.ascending = true;
    v.strongly_slide_free = is_strongly_slide_free(g);
    v.rigid = ascending_rigid(*n);
    const Side unit = g.edge(0).at(Side::A).label == 1 ? Side::A : Side::B;
    for (Label d = 2; d < *n; ++d) {
      if (*n % d == 0 && !is_power_of(d, *n))
        v.violations.push_back({0, EdgeEnd{0, unit}, EdgeEnd{0, opposite(unit)}, ViolationKind::Induction, d});
    }
    return v;
  }
  return edge_pair_rigid(g);
}

std::string describe(const Graph& g, const RigidityVerdict& v) {
  std::ostringstream out;
  out << (v.reduced ? "reduced" : "not-reduced");
  if (v.reduced) out << (v.ascending ? " ascending" : " not-ascending");
  out << (v.rigid ? " rigid" : " not-rigid");
  if (!v.reduced && v.collapse_witness) {
    out << " (" << g.end_name(*v.collapse_witness) << " is a non-loop end labelled 1)";
  } else if (v.ascending) {
    const Label n = *ascending_index(g);
    if (n == 1) {
      out << " (s=1)";
    } else if (v.rigid) {
      out << " (s=" << n << " is prime)";
    } else {
      out << " (s=" << n << " is not 1 or prime)";
    }
  } else if (!v.rigid) {
    out << " (" << v.violations.size() << " violating pair" << (v.violations.size() == 1 ? "" : "s") << ")";
  }
  out << "\nstrongly-slide-free: " << (v.strongly_slide_free ? "yes" : "no") << "\n";
  for (const auto& x : v.violations) {
    out << "violation: " << g.vertex_name(x.vertex) << " " << g.end_name(x.e) << " " << g.end_name(x.f) << " "
        << to_string(x.kind);
    if (x.kind == ViolationKind::Induction) out << " d=" << x.divisor;
    out << "\n";
  }
  return out.str();
}

}  // namespace gbsr
