#include "arbocoh/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "arbocoh/cli/output.hpp"
#include "arbocoh/error.hpp"
#include "arbocoh/flip.hpp"
#include "arbocoh/sampling.hpp"
#include "arbocoh/shape_io.hpp"
#include "arbocoh/spherical.hpp"

namespace arbocoh::cli {

namespace {

double parse_real(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument(s);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts{""};
  for (char c : s) {
    if (c == sep) {
      parts.emplace_back();
    } else {
      parts.back() += c;
    }
  }
  return parts;
}

CharacterTableOptions table_options(const Config& cfg) {
  CharacterTableOptions o;
  o.tolerance = cfg.tolerances.orthogonality;
  return o;
}

nlohmann::ordered_json header(const char* command, const Config& cfg) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["seed"] = cfg.seed;
  return j;
}

nlohmann::ordered_json words(const std::vector<Vertex>& vs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : vs) out.push_back(vertex_to_json(v));
  return out;
}

}  // namespace

std::complex<double> parse_complex(const std::string& raw) {
  std::string s;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw.compare(i, 3, "−") == 0) {  // unicode minus
      s += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(raw[i]))) {
      s += raw[i];
    }
  }
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    if (s.back() != 'i') return {parse_real(s), 0.0};
    s.pop_back();
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos) return {0.0, parse_real(s)};
    return {parse_real(s.substr(0, cut)), parse_real(s.substr(cut))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse complex number '" + raw + "'");
  }
}

Shape parse_shape(const nlohmann::json& j) {
  if (j.is_object()) return shape_from_json(j);
  if (!j.is_string()) throw Error(ErrorKind::InvalidArgument, "shape must be an object or a builder string");
  const auto parts = split(j.get<std::string>(), ':');
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw Error(ErrorKind::InvalidArgument, "missing builder argument");
    try {
      return std::stoi(parts[i]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad builder argument '" + parts[i] + "'");
    }
  };
  const std::string& kind = parts[0];
  if (kind == "vertex" && parts.size() == 2) return vertex_shape(arg(1));
  if (kind == "edge" && parts.size() == 2) return edge_shape(arg(1));
  if (kind == "star" && parts.size() == 2) return star_shape(arg(1));
  if (kind == "y" && parts.size() == 2) return y_shape(arg(1));
  if (kind == "centipede" && parts.size() == 3) return centipede_shape(arg(1), arg(2));
  throw Error(ErrorKind::InvalidArgument, "unknown shape builder '" + j.get<std::string>() + "'");
}

RepDescriptor parse_descriptor(const nlohmann::json& j, const Config& cfg) {
  try {
    if (!j.is_object() || !j.contains("tag")) throw Error(ErrorKind::InvalidArgument, "descriptor needs a tag");
    const std::string tag = j.at("tag").get<std::string>();
    const int q = j.contains("q") ? j.at("q").get<int>() : 2;
    if (tag == "spherical") {
      if (!j.contains("z")) throw Error(ErrorKind::InvalidArgument, "spherical descriptor needs z");
      const auto& z = j.at("z");
      return RepDescriptor::spherical(q, z.is_number() ? std::complex<double>(z.get<double>(), 0)
                                                       : parse_complex(z.get<std::string>()));
    }
    if (tag == "special") {
      if (!j.contains("sign")) throw Error(ErrorKind::InvalidArgument, "special descriptor needs sign");
      const auto& s = j.at("sign");
      int sign = 0;
      if (s.is_number_integer()) {
        sign = s.get<int>();
      } else {
        const std::string t = s.get<std::string>();
        sign = t == "+" ? 1 : (t == "-" || t == "−") ? -1 : 0;
      }
      return RepDescriptor::special(q, sign);
    }
    if (tag == "cuspidal") {
      if (!j.contains("shape") || !j.contains("irrep")) {
        throw Error(ErrorKind::InvalidArgument, "cuspidal descriptor needs shape and irrep");
      }
      auto shape = std::make_shared<const Shape>(parse_shape(j.at("shape")));
      const CharacterTable t = character_table(shape_automorphism_group(*shape, cfg.group_order_bound), table_options(cfg));
      const auto& irrep = j.at("irrep");
      std::size_t row = t.rows();
      if (irrep.is_number_integer()) {
        const auto r = irrep.get<long long>();
        if (r >= 0) row = static_cast<std::size_t>(r);
      } else if (irrep.get<std::string>() == "sign-kernel-st") {
        row = sign_kernel_st_row(*shape, t);
      } else {
        for (std::size_t r = 0; r < t.rows(); ++r) {
          if (character_fingerprint(t, r) == irrep.get<std::string>()) row = r;
        }
      }
      if (row >= t.rows()) throw Error(ErrorKind::InvalidArgument, "no such irreducible: " + irrep.dump());
      return RepDescriptor::cuspidal(shape, row);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown tag '" + tag + "'");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::GroupTooLarge) throw;
    throw Error(ErrorKind::InvalidDescriptor, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidDescriptor, e.what());
  }
}

nlohmann::ordered_json cmd_classify(const nlohmann::json& descriptor, int n, const Config& cfg) {
  const RepDescriptor d = parse_descriptor(descriptor, cfg);
  const int dim = classify_bounded_cohomology(d, n);

  nlohmann::ordered_json desc;
  switch (d.kind) {
    case RepDescriptor::Kind::Spherical:
      desc["tag"] = "spherical";
      desc["q"] = d.q;
      desc["z"] = complex_json(d.z);
      break;
    case RepDescriptor::Kind::Special:
      desc["tag"] = "special";
      desc["q"] = d.q;
      desc["sign"] = d.sign > 0 ? "+" : "-";
      break;
    case RepDescriptor::Kind::Cuspidal: {
      const CharacterTable t = character_table(shape_automorphism_group(*d.shape, cfg.group_order_bound), table_options(cfg));
      desc["tag"] = "cuspidal";
      desc["q"] = d.q;
      desc["shape"] = shape_to_json(*d.shape);
      desc["class"] = classify_shape(*d.shape).to_string();
      desc["irrep"] = d.row;
      desc["fingerprint"] = character_fingerprint(t, d.row);
      break;
    }
  }
  auto out = header("classify", cfg);
  out["descriptor"] = desc;
  out["n"] = n;
  out["dim"] = dim;
  out["table"] = nlohmann::ordered_json::array({{{"tag", desc["tag"]}, {"n", n}, {"dim", dim}}});
  return out;
}

nlohmann::ordered_json cmd_spectrum(const nlohmann::json& shape_json, const Config& cfg) {
  const Shape s = parse_shape(shape_json);
  const PermGroup g = shape_automorphism_group(s, cfg.group_order_bound);
  const auto entries = enumerate_nondegenerate(s, table_options(cfg));
  const CharacterTable t = character_table(g, table_options(cfg));

  auto out = header("spectrum", cfg);
  out["shape"] = shape_to_json(s);
  out["class"] = classify_shape(s).to_string();
  out["group_order"] = g.order();
  auto table = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    table.push_back({{"row", e.row}, {"degree", e.degree}, {"fingerprint", character_fingerprint(t, e.row)}, {"h2", e.h2}});
  }
  out["table"] = table;
  return out;
}

nlohmann::ordered_json cmd_shapes_enumerate(int q, int max_diameter, const Config& cfg) {
  if (q < 2 || max_diameter < 0) throw Error(ErrorKind::InvalidArgument, "need q >= 2 and max diameter >= 0");
  auto out = header("shapes-enumerate", cfg);
  out["q"] = q;
  out["max_diameter"] = max_diameter;
  auto table = nlohmann::ordered_json::array();
  const auto shapes = enumerate_complete_shapes(q, max_diameter);
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const Shape& s = shapes[i];
    table.push_back({{"index", i},
                     {"size", s.size()},
                     {"diameter", diameter(s)},
                     {"class", classify_shape(s).to_string()},
                     {"group_order", shape_automorphism_group(s, cfg.group_order_bound).order()},
                     {"shape", shape_to_json(s)}});
  }
  out["table"] = table;
  return out;
}

nlohmann::ordered_json cmd_chartab(const nlohmann::json& shape_json, const Config& cfg) {
  const Shape s = parse_shape(shape_json);
  const CharacterTable t = character_table(shape_automorphism_group(s, cfg.group_order_bound), table_options(cfg));

  auto out = header("chartab", cfg);
  out["shape"] = shape_to_json(s);
  out["group_order"] = t.group.order();
  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : t.classes) {
    Permutation rep = t.group.elements()[c.front()];
    for (auto idx : c) rep = std::min(rep, t.group.elements()[idx]);
    classes.push_back({{"representative", rep}, {"size", c.size()}});
  }
  out["classes"] = classes;
  auto characters = nlohmann::ordered_json::array();
  auto table = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < t.rows(); ++r) {
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : t.characters[r]) values.push_back(complex_json(v));
    characters.push_back(values);
    table.push_back({{"row", r}, {"degree", t.degrees[r]}, {"fingerprint", character_fingerprint(t, r)}});
  }
  out["characters"] = characters;
  out["row_residual"] = round12(row_orthogonality_residual(t));
  out["column_residual"] = round12(column_orthogonality_residual(t));
  out["table"] = table;
  return out;
}

nlohmann::ordered_json cmd_flip_demo(const Config& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const FlipInstance inst = random_flip_instance(cfg.default_depth, rng);
  const FlipWitness w = find_flip(inst.tree, inst.rays, inst.subtree, cfg.default_depth);
  const std::string check = check_flip(w, inst.rays, inst.subtree);

  std::vector<Vertex> ends;
  for (const auto& r : inst.rays) ends.push_back(r.end());
  auto out = header("flip-demo", cfg);
  out["q"] = inst.tree.q;
  out["depth"] = cfg.default_depth;
  out["rays"] = words(ends);
  out["subtree"] = words(inst.subtree);
  out["i"] = w.i;
  out["j"] = w.j;
  out["median"] = vertex_to_json(w.median);
  out["secondary_median"] = vertex_to_json(w.secondary_median);
  out["certified_depth"] = w.certified_depth;
  out["valid"] = check.empty();
  if (!check.empty()) out["failure"] = check;
  out["table"] = nlohmann::ordered_json::array(
      {{{"q", inst.tree.q}, {"rays", inst.rays.size()}, {"i", w.i}, {"j", w.j},
        {"certified_depth", w.certified_depth}, {"valid", check.empty()}}});
  return out;
}

nlohmann::ordered_json cmd_spherical_check(int q, const std::string& z_text, int max_distance, const Config& cfg) {
  if (q < 2 || max_distance < 2) throw Error(ErrorKind::InvalidArgument, "need q >= 2 and distance >= 2");
  const std::complex<double> z = parse_complex(z_text);
  const auto phi = phi_values(q, z, max_distance);

  std::vector<Vertex> path{Vertex{}};
  while (static_cast<int>(path.size()) <= max_distance) path.push_back(path.back().child(0));
  const double gram = gram_min_eigenvalue(q, z, path);

  auto out = header("spherical-check", cfg);
  out["q"] = q;
  out["z"] = complex_json(z);
  out["mu"] = complex_json(mu_of_z(q, z));
  out["admissible"] = is_admissible(q, z);
  out["eigen_residual"] = round12(eigen_residual(q, z, phi));
  out["gram_min_eigenvalue_path"] = round12(gram);
  out["gram_psd"] = gram >= -cfg.tolerances.psd;
  auto table = nlohmann::ordered_json::array();
  for (int d = 0; d <= max_distance; ++d) {
    table.push_back({{"d", d}, {"re", round12(phi[d].real())}, {"im", round12(phi[d].imag())}});
  }
  out["table"] = table;
  return out;
}

}  // namespace arbocoh::cli
