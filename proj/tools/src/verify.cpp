#include "arbocoh/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "arbocoh/classify.hpp"
#include "arbocoh/cli/output.hpp"
#include "arbocoh/error.hpp"
#include "arbocoh/flip.hpp"
#include "arbocoh/irrep.hpp"
#include "arbocoh/sampling.hpp"
#include "arbocoh/spherical.hpp"

namespace arbocoh::cli {

namespace {

struct Check {
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  int instances = 0;
  int failures = 0;
  double max_residual = 0;
  std::string first_failure;

  void record(bool ok, double residual = 0, const std::string& what = {}) {
    ++instances;
    max_residual = std::max(max_residual, residual);
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
  void fail(const std::string& what) { record(false, 0, what); }
};

using Report = std::vector<Check>;

// Runs body(check), turning library errors into a recorded failure.
void guarded(Check& c, const std::function<void(Check&)>& body) {
  try {
    body(c);
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

Vertex extend_randomly(const TreeParams& tree, Vertex v, int depth, std::mt19937_64& rng) {
  while (v.depth() < depth) {
    v = v.child(static_cast<Label>(std::uniform_int_distribution<int>(0, tree.labels_at(v.depth()) - 1)(rng)));
  }
  return v;
}

Report geometry_suite(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const int depth = std::max(cfg.default_depth, 8);
  auto random_tree = [&rng] { return TreeParams(std::uniform_int_distribution<int>(2, 3)(rng)); };
  Check cocycle{"busemann_cocycle"}, rn{"radon_nikodym"}, med{"median_products"}, add{"cylinder_additivity"};
  for (int n = 0; n < 500; ++n) {
    guarded(cocycle, [&](Check& c) {
      const TreeParams t = random_tree();
      const RayPrefix g = random_ray(t, depth, rng);
      const Vertex x = random_vertex(t, 4, rng), y = random_vertex(t, 4, rng), z = random_vertex(t, 4, rng);
      c.record(busemann(g, x, y) + busemann(g, y, z) == busemann(g, x, z), 0, "cocycle at " + x.to_string());
    });
    guarded(rn, [&](Check& c) {
      const TreeParams t = random_tree();
      const Vertex x = random_vertex(t, 3, rng), y = random_vertex(t, 3, rng);
      const Vertex w = extend_randomly(t, Vertex{}, 5, rng);
      const RayPrefix g(extend_randomly(t, w, depth, rng));
      c.record(half_tree_measure(t, y, w) / half_tree_measure(t, x, w) == poisson_kernel(t, x, y, g), 0,
               "ratio at " + w.to_string());
    });
    guarded(med, [&](Check& c) {
      const TreeParams t = random_tree();
      const auto r = random_distinct_rays(t, 3, depth, depth / 2, rng);
      const Vertex m = median(r[0], r[1], r[2]);
      c.record(gromov_product(r[0], r[1], m) == 0 && gromov_product(r[0], r[2], m) == 0 &&
                   gromov_product(r[1], r[2], m) == 0,
               0, "median " + m.to_string());
    });
    guarded(add, [&](Check& c) {
      const TreeParams t = random_tree();
      const Vertex x = random_vertex(t, 3, rng);
      Vertex w = random_vertex(t, 4, rng);
      if (w == x) w = w.child(0);
      Rational sum = 0;
      for (const auto& nb : neighbors(t, w)) {
        if (distance(nb, x) > distance(w, x)) sum += cylinder_measure(t, x, nb);
      }
      Rational half = 0;
      for (Label l = 0; l < t.labels_at(w.depth()); ++l) half += half_tree_measure(t, x, w.child(l));
      c.record(sum == cylinder_measure(t, x, w) && half == half_tree_measure(t, x, w), 0, "split at " + w.to_string());
    });
  }
  return {cocycle, rn, med, add};
}

Report flip_suite(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  Check c{"flip_witnesses"};
  for (int n = 0; n < 1000; ++n) {
    guarded(c, [&](Check& chk) {
      const FlipInstance inst = random_flip_instance(cfg.default_depth, rng);
      const FlipWitness w = find_flip(inst.tree, inst.rays, inst.subtree, cfg.default_depth);
      const std::string why = check_flip(w, inst.rays, inst.subtree);
      chk.record(why.empty(), 0, why);
    });
  }
  return {c};
}

std::vector<Shape> small_shapes() {
  auto shapes = enumerate_complete_shapes(2, 4);
  for (auto& s : enumerate_complete_shapes(3, 3)) shapes.push_back(std::move(s));
  return shapes;
}

Report groups_suite(const Config& cfg) {
  Check axioms{"group_axioms"}, classes{"class_partition"}, tables{"character_tables"};
  for (const Shape& s : small_shapes()) {
    guarded(axioms, [&](Check& c) {
      const PermGroup g = shape_automorphism_group(s, cfg.group_order_bound);
      bool ok = g.contains(identity_permutation(s.size()));
      for (const auto& a : g.elements()) {
        ok = ok && g.contains(inverse(a));
        for (const auto& gen : g.generators()) ok = ok && g.contains(compose(gen, a));
      }
      c.record(ok, 0, "shape of size " + std::to_string(s.size()));
    });
    guarded(classes, [&](Check& c) {
      const PermGroup g = shape_automorphism_group(s, cfg.group_order_bound);
      std::size_t total = 0;
      for (const auto& cl : conjugacy_classes(g)) total += cl.size();
      c.record(total == g.order(), 0, "class sizes do not add up");
    });
    guarded(tables, [&](Check& c) {
      CharacterTableOptions o;
      o.tolerance = cfg.tolerances.orthogonality;
      const CharacterTable t = character_table(shape_automorphism_group(s, cfg.group_order_bound), o);
      long long squares = 0;
      for (int d : t.degrees) squares += static_cast<long long>(d) * d;
      const double residual = std::max(row_orthogonality_residual(t), column_orthogonality_residual(t));
      c.record(residual < cfg.tolerances.orthogonality && squares == static_cast<long long>(t.group.order()) &&
                   t.rows() == t.classes.size(),
               residual, "table of order " + std::to_string(t.group.order()));
    });
  }
  return {axioms, classes, tables};
}

Report reps_suite(const Config& cfg) {
  Check model{"irrep_models"}, ranks{"invariant_dim_vs_rank"}, choice{"h2_choice_independence"};
  for (const Shape& s : enumerate_complete_shapes(2, 4)) {
    if (diameter(s) < 2) continue;
    guarded(model, [&](Check& c) {
      const CharacterTable t = character_table(shape_automorphism_group(s, cfg.group_order_bound));
      for (std::size_t r = 0; r < t.rows(); ++r) {
        const IrrepModel m = realize_irrep(t, r, cfg.seed);
        const double res = std::max({unitarity_residual(m), multiplicativity_residual(m), trace_residual(m, t)});
        c.record(res < 1e-9, res, "row " + std::to_string(r));
        for (int v = 0; v < s.size(); ++v) {
          const PermGroup h = pointwise_stabilizer(t.group, {v});
          const int rank = numerical_rank(invariant_projector(m, h));
          ranks.record(rank == invariant_dim(t, r, h), 0, "stabilizer of vertex " + std::to_string(v));
        }
      }
    });
  }
  for (int q : {2, 3}) {
    for (const Shape& s : enumerate_complete_shapes(q, 4)) {
      if (diameter(s) < 2 || classify_shape(s).tag != ShapeClass::Tag::Centipede) continue;
      guarded(choice, [&](Check& c) {
        const CharacterTable t = character_table(shape_automorphism_group(s, cfg.group_order_bound));
        const auto pairs = admissible_pairs(s);
        for (std::size_t r = 0; r < t.rows(); ++r) {
          if (!is_nondegenerate(s, t, r)) continue;
          const int ref = h2_dimension(s, t, r, pairs.front().first, pairs.front().second);
          bool same = true;
          for (const auto& [x, y] : pairs) same = same && h2_dimension(s, t, r, x, y) == ref;
          c.record(same, 0, "row " + std::to_string(r));
        }
      });
    }
  }
  return {model, ranks, choice};
}

Report spherical_suite(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  Check eig{"eigen_residual"}, sym{"phi_symmetry"}, psd{"gram_psd"}, viol{"gram_violation_z2"},
      inter{"intertwiner_residual"}, unit{"pi_z_unitarity"};
  for (int q : {2, 3}) {
    const double period = M_PI / std::log(static_cast<double>(q));
    for (std::complex<double> z : {std::complex<double>(0.5, 0), {0.5, 0.7}, {0.3, 0}, {0.3, period}}) {
      guarded(eig, [&](Check& c) {
        const double r = eigen_residual(q, z, 8);
        c.record(r < 1e-10, r, "eigen residual");
      });
      guarded(sym, [&](Check& c) {
        const auto a = phi_values(q, z, 8);
        const auto b = phi_values(q, 1.0 - z, 8);
        double worst = 0;
        for (std::size_t d = 0; d < a.size(); ++d) worst = std::max(worst, std::abs(a[d] - b[d]));
        c.record(worst < 1e-12, worst, "phi_z != phi_(1-z)");
      });
      guarded(psd, [&](Check& c) {
        std::vector<Vertex> vs;
        while (vs.size() < 20) {
          const Vertex v = random_vertex(TreeParams(q), 4, rng);
          if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        }
        const double m = gram_min_eigenvalue(q, z, vs);
        c.record(m >= -cfg.tolerances.psd, std::max(0.0, -m), "negative Gram eigenvalue");
      });
    }
  }
  guarded(viol, [&](Check& c) {
    std::vector<Vertex> path{Vertex{}};
    while (path.size() < 6) path.push_back(path.back().child(0));
    const double m = gram_min_eigenvalue(2, {2.0, 0.0}, path);
    c.record(m < -1e-6, 0, "no violation found for z = 2");
  });
  for (int n = 1; n <= 4; ++n) {
    guarded(inter, [&](Check& c) {
      const Intertwiner it = intertwiner_matrix(2, {0.3, 0.0}, n, cfg.tolerances.intertwiner);
      c.record(true, std::max(it.residual, it.probe_residual));
    });
  }
  const std::complex<double> z(0.5, 0.3);
  const TreeParams t2(2);
  std::uniform_real_distribution<double> coeff(-1, 1);
  for (int n = 0; n < 20; ++n) {
    guarded(unit, [&](Check& c) {
      const TreeIsometry f = random_isometry(t2, 6, 2, rng);
      CylinderFunction a{2, {}}, b{2, {}};
      for (std::size_t i = 0; i < count_at_depth(t2, 2); ++i) {
        a.coefficients.emplace_back(coeff(rng), coeff(rng));
        b.coefficients.emplace_back(coeff(rng), coeff(rng));
      }
      const auto before = inner_product_z(t2, a, b, z);
      const auto after = inner_product_z(t2, pi_z_apply(f, a, z), pi_z_apply(f, b, z), z);
      const double dev = std::abs(after - before);
      c.record(dev < cfg.tolerances.unitarity, dev, "inner product not preserved");
    });
  }
  return {eig, sym, psd, viol, inter, unit};
}

nlohmann::ordered_json check_json(const Check& c, const std::string& suite) {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["check"] = c.name;
  j["instances"] = c.instances;
  j["failures"] = c.failures;
  j["max_residual"] = round12(c.max_residual);
  j["passed"] = c.failures == 0 && c.instances > 0;
  if (c.failures > 0) j["first_failure"] = c.first_failure;
  return j;
}

Report dispatch(const std::string& name, const Config& cfg) {
  if (name == "geometry") return geometry_suite(cfg);
  if (name == "flip") return flip_suite(cfg);
  if (name == "groups") return groups_suite(cfg);
  if (name == "reps") return reps_suite(cfg);
  if (name == "spherical") return spherical_suite(cfg);
  throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"geometry", "flip", "groups", "reps", "spherical"};
  return names;
}

nlohmann::ordered_json run_suite(const std::string& name, const Config& cfg) {
  if (name != "all" && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
  }
  nlohmann::ordered_json out;
  out["command"] = "verify";
  out["suite"] = name;
  out["seed"] = cfg.seed;
  auto table = nlohmann::ordered_json::array();
  bool passed = true;
  for (const auto& suite : suite_names()) {
    if (name != "all" && suite != name) continue;
    for (const auto& c : dispatch(suite, cfg)) {
      table.push_back(check_json(c, suite));
      passed = passed && table.back()["passed"].get<bool>();
    }
  }
  out["passed"] = passed;
  out["table"] = table;
  return out;
}

}  // namespace arbocoh::cli
