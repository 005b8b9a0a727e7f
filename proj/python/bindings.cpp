// Python bindings. Everything crosses the boundary as plain tuples and lists:
// an arc is (i, j), a tiling is (points, arcs), and a quiver is
// (vertex_count, [(id, source, target)], [(a, b)]).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrigid/errors.hpp"
#include "mrigid/invariants.hpp"
#include "mrigid/orbit.hpp"
#include "mrigid/quiver.hpp"
#include "mrigid/reconstruct.hpp"
#include "mrigid/rigid.hpp"
#include "mrigid/svg.hpp"

namespace py = pybind11;
using namespace mrigid;

namespace {

using Arc = std::pair<int, int>;
using PyQuiver = std::tuple<int, std::vector<std::tuple<int, int, int>>, std::vector<Arc>>;
using PyTiling = std::pair<int, std::vector<Arc>>;

ArcCollection collection(int n, int m, const std::vector<Arc>& arcs) {
  const PolygonContext ctx(n, m);
  std::vector<Diagonal> ds;
  for (auto [i, j] : arcs) ds.push_back(make_diagonal(ctx, i, j));
  return ArcCollection(ctx, std::move(ds));
}

std::vector<Arc> arcs_of(const ArcCollection& tc) {
  std::vector<Arc> out;
  for (const Diagonal& d : tc.arcs()) out.emplace_back(d.lo, d.hi);
  return out;
}

Quiver to_quiver(const PyQuiver& q) {
  std::vector<Arrow> arrows;
  for (auto [id, s, t] : std::get<1>(q)) arrows.push_back({id, s, t});
  const auto& rels = std::get<2>(q);
  return Quiver(std::get<0>(q), std::move(arrows), std::set<Arc>(rels.begin(), rels.end()));
}

PyQuiver from_quiver(const Quiver& q) {
  PyQuiver out;
  std::get<0>(out) = q.vertex_count();
  for (const Arrow& a : q.arrows()) std::get<1>(out).emplace_back(a.id, a.source, a.target);
  std::get<2>(out).assign(q.relations().begin(), q.relations().end());
  return out;
}

AbstractTiling to_tiling(int points, const std::vector<Arc>& arcs) {
  AbstractTiling t;
  t.marked_points = points;
  t.arcs = arcs;
  return t;
}

py::object gorenstein_value(const GorensteinResult& g) {
  if (g.kind == GorensteinResult::Kind::kExact) return py::int_(g.value);
  return py::str(to_string(g));
}

}  // namespace

PYBIND11_MODULE(_mrigid, mod) {
  mod.doc() = "Maximal m-rigid objects in type A higher cluster categories and their gentle algebras";

  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(mod, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(mod, "ResourceError", PyExc_RuntimeError);

  mod.def("vertex_count", [](int n, int m) { return PolygonContext(n, m).vertex_count(); }, py::arg("n"),
          py::arg("m"));
  mod.def(
      "all_diagonals",
      [](int n, int m) {
        std::vector<Arc> out;
        for (const Diagonal& d : all_diagonals(PolygonContext(n, m))) out.emplace_back(d.lo, d.hi);
        return out;
      },
      py::arg("n"), py::arg("m"));
  mod.def(
      "ext_nonzero",
      [](int n, int m, Arc b, Arc a, int k) {
        const PolygonContext ctx(n, m);
        return ext_nonzero(ctx, make_diagonal(ctx, b.first, b.second), make_diagonal(ctx, a.first, a.second), k);
      },
      py::arg("n"), py::arg("m"), py::arg("b"), py::arg("a"), py::arg("k"),
      "Whether Ext^k(b, a) is non-zero.");

  mod.def("is_m_rigid", [](int n, int m, const std::vector<Arc>& arcs) { return is_m_rigid(collection(n, m, arcs)); },
          py::arg("n"), py::arg("m"), py::arg("arcs"));
  mod.def("is_maximal", [](int n, int m, const std::vector<Arc>& arcs) { return is_maximal(collection(n, m, arcs)); },
          py::arg("n"), py::arg("m"), py::arg("arcs"));
  mod.def(
      "is_connected", [](int n, int m, const std::vector<Arc>& arcs) { return is_connected(collection(n, m, arcs)); },
      py::arg("n"), py::arg("m"), py::arg("arcs"));
  mod.def(
      "satisfies_criterion",
      [](int n, int m, const std::vector<Arc>& arcs) { return satisfies_theorem(collection(n, m, arcs)); },
      py::arg("n"), py::arg("m"), py::arg("arcs"),
      "Tile-type test for a connected non-crossing collection.");
  mod.def(
      "enumerate",
      [](int n, int m, bool connected, unsigned threads) {
        EnumerationOptions opts;
        opts.threads = threads;
        const PolygonContext ctx(n, m);
        std::vector<ArcCollection> found;
        {
          py::gil_scoped_release release;
          found = connected ? enumerate_connected_maximal(ctx, opts) : enumerate_maximal(ctx, opts);
        }
        std::vector<std::vector<Arc>> out;
        for (const auto& tc : found) out.push_back(arcs_of(tc));
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("connected") = false, py::arg("threads") = 1);

  mod.def(
      "tiling_algebra",
      [](int points, const std::vector<Arc>& arcs) { return from_quiver(tiling_algebra(to_tiling(points, arcs))); },
      py::arg("points"), py::arg("arcs"));
  mod.def("is_gentle", [](const PyQuiver& q) { return is_gentle(to_quiver(q)); }, py::arg("quiver"));
  mod.def(
      "ag_invariant",
      [](const PyQuiver& q) { return ag_invariant(to_quiver(q)).pairs; }, py::arg("quiver"));
  mod.def(
      "gorenstein_dimension", [](const PyQuiver& q) { return gorenstein_value(gorenstein_endomorphism(to_quiver(q))); },
      py::arg("quiver"), "An int, or the string 'at most 1'.");
  mod.def(
      "is_end_algebra", [](const PyQuiver& q, int m) { return is_end_algebra(to_quiver(q), m); }, py::arg("quiver"),
      py::arg("m"));
  mod.def(
      "reconstruct",
      [](const PyQuiver& q, std::optional<int> m, std::size_t root) {
        ReconstructOptions opts;
        opts.m = m;
        opts.root = root;
        const AbstractTiling t = tiling_from_gentle(to_quiver(q), opts);
        return PyTiling{t.marked_points, t.arcs};
      },
      py::arg("quiver"), py::arg("m") = py::none(), py::arg("root") = 0);
  mod.def(
      "quiver_isomorphic",
      [](const PyQuiver& a, const PyQuiver& b) { return quiver_isomorphic(to_quiver(a), to_quiver(b)); },
      py::arg("a"), py::arg("b"));
  mod.def(
      "cluster_profile",
      [](int n, int m, const std::vector<Arc>& arcs) {
        const ClusterProfile p = cluster_profile(collection(n, m, arcs));
        py::dict d;
        d["counts"] = std::vector<int>(p.counts.begin() + 1, p.counts.end());
        d["n1_prime"] = p.n1_prime;
        d["nm3_prime"] = p.nm3_prime;
        d["x"] = p.x;
        d["rank"] = p.rank;
        d["needs_cut"] = p.needs_cut();
        d["angulation"] = PyTiling{p.angulation.marked_points, p.angulation.arcs};
        d["cut"] = p.cut;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("arcs"));
  mod.def(
      "render_svg",
      [](int points, const std::vector<Arc>& arcs, std::optional<int> m) {
        return render_svg(to_tiling(points, arcs), m);
      },
      py::arg("points"), py::arg("arcs"), py::arg("m") = py::none());
}
