// Copyright 2026 The Haco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "haco/serialization.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace haco {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  require(it != j.end(), errc::parse_error,
          std::string("missing field '") + name + "'");
  return *it;
}

json big_int_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class big_int_from_json(const json& j, const char* name) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::exception&) {
      fail(errc::parse_error,
           std::string("field '") + name + "' is not a decimal integer");
    }
  }
  fail(errc::parse_error,
       std::string("field '") + name + "' must be an integer or string");
}

json group_to_json(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::ZLex:
      return json{{"kind", "z_lex"}, {"dim", g.dim}};
    case GroupKind::ZInfLex:
      return json{{"kind", "z_inf_lex"}};
    case GroupKind::Rationals:
      return json{{"kind", "rationals"}};
  }
  fail(errc::parse_error, "unknown group kind");
}

GroupDescriptor group_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "z_lex") {
    return GroupDescriptor::z_lex(field(j, "dim").get<int>());
  }
  if (kind == "z_inf_lex") return GroupDescriptor::z_inf_lex();
  if (kind == "rationals") return GroupDescriptor::rationals();
  fail(errc::parse_error, "field 'kind' must be one of z_lex, z_inf_lex, "
                          "rationals; got '" + kind + "'");
}

json character_to_json(const Character& chi) {
  switch (chi.group().kind) {
    case GroupKind::ZLex:
      return json(chi.z_lex_coords());
    case GroupKind::ZInfLex: {
      json out = json::array();
      for (const SparseEntry& e : chi.sparse_entries())
        out.push_back(json::array({e.index, e.value}));
      return out;
    }
    case GroupKind::Rationals: {
      const Rational& q = chi.rational_value();
      return json::array(
          {big_int_to_json(q.get_num()), big_int_to_json(q.get_den())});
    }
  }
  fail(errc::parse_error, "unknown group kind");
}

Character character_from_json(const json& j, const GroupDescriptor& group) {
  require(j.is_array(), errc::parse_error,
          "field 'character' must be an array");
  switch (group.kind) {
    case GroupKind::ZLex: {
      require(static_cast<int>(j.size()) == group.dim, errc::parse_error,
              "field 'character' must have " + std::to_string(group.dim) +
                  " components");
      return Character::z_lex(j.get<std::vector<std::int64_t>>());
    }
    case GroupKind::ZInfLex: {
      SparseSeq entries;
      for (const json& pair : j) {
        require(pair.is_array() && pair.size() == 2, errc::parse_error,
                "field 'character' entries must be [index, value] pairs");
        entries.push_back({pair[0].get<std::int32_t>(),
                           pair[1].get<std::int64_t>()});
      }
      return Character::z_inf_lex(std::move(entries));
    }
    case GroupKind::Rationals: {
      require(j.size() == 2, errc::parse_error,
              "field 'character' must be [numerator, denominator]");
      const mpz_class num = big_int_from_json(j[0], "character.numerator");
      const mpz_class den = big_int_from_json(j[1], "character.denominator");
      require(den > 0, errc::parse_error,
              "field 'character.denominator' must be positive");
      return Character::rational(Rational(num, den));
    }
  }
  fail(errc::parse_error, "unknown group kind");
}

json sparse_to_json(const SparseSeq& seq) {
  json out = json::array();
  for (const SparseEntry& e : seq)
    out.push_back(json::array({e.index, e.value}));
  return out;
}

SparseSeq sparse_from_json(const json& j, const char* name) {
  require(j.is_array(), errc::parse_error,
          std::string("field '") + name + "' must be an array of pairs");
  SparseSeq out;
  for (const json& pair : j) {
    require(pair.is_array() && pair.size() == 2, errc::parse_error,
            std::string("field '") + name + "' entries must be pairs");
    out.push_back({pair[0].get<std::int32_t>(), pair[1].get<std::int64_t>()});
  }
  return out;
}

json automorphism_to_json(const Automorphism& a) {
  json out;
  out["family"] = family_name(a);
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, UnimodMatrix>) {
          out["dim"] = fam.dim;
          json rows = json::array();
          for (int i = 0; i < fam.dim; ++i) {
            json row = json::array();
            for (int j = 0; j < fam.dim; ++j) row.push_back(fam.at(i, j));
            rows.push_back(std::move(row));
          }
          out["matrix"] = std::move(rows);
        } else if constexpr (std::is_same_v<T, LowerUnitriangular>) {
          out["dim"] = fam.dim;
          json entries = json::array();
          for (int i = 1; i < fam.dim; ++i)
            for (int j = 0; j < i; ++j)
              entries.push_back(json::array({i + 1, j + 1, fam.at(i, j)}));
          out["entries"] = std::move(entries);
        } else if constexpr (std::is_same_v<T, TwoDiagonal>) {
          out["entries"] = sparse_to_json(fam.sub);
          if (fam.inverted) out["inverted"] = true;
        } else if constexpr (std::is_same_v<T, SigmaU>) {
          out["u"] = sparse_to_json(fam.u);
          if (fam.inverted) out["inverted"] = true;
        } else if constexpr (std::is_same_v<T, RationalScale>) {
          out["q"] = json::array({big_int_to_json(fam.q.get_num()),
                                  big_int_to_json(fam.q.get_den())});
        } else {
          out["signs"] = fam.signs;
        }
      },
      a.value);
  return out;
}

Automorphism automorphism_from_json(const json& j) {
  const std::string family = field(j, "family").get<std::string>();
  if (family == "unimod_matrix") {
    const int dim = field(j, "dim").get<int>();
    const json& rows = field(j, "matrix");
    require(rows.is_array() && static_cast<int>(rows.size()) == dim,
            errc::parse_error, "field 'matrix' must have dim rows");
    std::vector<std::int64_t> entries;
    entries.reserve(static_cast<std::size_t>(dim) * dim);
    for (const json& row : rows) {
      require(row.is_array() && static_cast<int>(row.size()) == dim,
              errc::parse_error, "field 'matrix' rows must have dim entries");
      for (const json& v : row) entries.push_back(v.get<std::int64_t>());
    }
    return make_unimod_matrix(dim, std::move(entries));
  }
  if (family == "lower_unitriangular") {
    const int dim = field(j, "dim").get<int>();
    std::vector<std::int64_t> sub(
        static_cast<std::size_t>(dim) * (dim - 1) / 2, 0);
    for (const json& triple : field(j, "entries")) {
      require(triple.is_array() && triple.size() == 3, errc::parse_error,
              "field 'entries' must hold [row, col, value] triples");
      const int i = triple[0].get<int>() - 1;
      const int col = triple[1].get<int>() - 1;
      require(i > col && col >= 0 && i < dim, errc::parse_error,
              "field 'entries' positions must satisfy dim >= row > col >= 1");
      sub[static_cast<std::size_t>(i) * (i - 1) / 2 + col] =
          triple[2].get<std::int64_t>();
    }
    return make_lower_unitriangular(dim, std::move(sub));
  }
  if (family == "two_diagonal") {
    TwoDiagonal t = make_two_diagonal(sparse_from_json(field(j, "entries"),
                                                       "entries"));
    t.inverted = j.value("inverted", false);
    return t;
  }
  if (family == "sigma_u") {
    SigmaU s = make_sigma_u(sparse_from_json(field(j, "u"), "u"));
    s.inverted = j.value("inverted", false);
    return s;
  }
  if (family == "rational_scale") {
    const json& q = field(j, "q");
    require(q.is_array() && q.size() == 2, errc::parse_error,
            "field 'q' must be [numerator, denominator]");
    return make_rational_scale(Rational(big_int_from_json(q[0], "q.numerator"),
                                        big_int_from_json(q[1],
                                                          "q.denominator")));
  }
  if (family == "coordinate_flip") {
    return make_coordinate_flip(field(j, "signs").get<std::vector<int>>());
  }
  fail(errc::parse_error, "unknown automorphism family '" + family + "'");
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

// Values of the wrong JSON type surface as library parse errors, not as
// raw json exceptions.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

}  // namespace

std::string to_json_string(const Spectrum& s, int indent) {
  json out;
  out["group"] = group_to_json(s.group());
  json terms = json::array();
  for (const auto& [chi, c] : s.terms()) {
    terms.push_back(json{{"character", character_to_json(chi)},
                         {"re", c.real()},
                         {"im", c.imag()}});
  }
  out["terms"] = std::move(terms);
  return out.dump(indent);
}

Spectrum spectrum_from_json(const std::string& text) {
  return guarded([&] {
  const json j = parse_text(text);
  const GroupDescriptor group = group_from_json(field(j, "group"));
  Spectrum s(group);
  for (const json& term : field(j, "terms")) {
    const Character chi = character_from_json(field(term, "character"), group);
    s.add(chi, Complex{field(term, "re").get<double>(),
                       field(term, "im").get<double>()});
  }
  return s;
  });
}

std::string to_json_string(const HausdorffOperator& h, int indent) {
  json out;
  out["group"] = group_to_json(h.group());
  json terms = json::array();
  for (const OperatorTerm& t : h.terms()) {
    terms.push_back(json{{"weight", json{{"re", t.weight.real()},
                                         {"im", t.weight.imag()}}},
                         {"side", "dual"},
                         {"automorphism", automorphism_to_json(t.dual_map)}});
  }
  out["terms"] = std::move(terms);
  return out.dump(indent);
}

HausdorffOperator operator_from_json(const std::string& text) {
  return guarded([&] {
  const json j = parse_text(text);
  const GroupDescriptor group = group_from_json(field(j, "group"));
  const json& terms = field(j, "terms");
  require(terms.is_array() && !terms.empty(), errc::parse_error,
          "field 'terms' must be a nonempty array");

  bool all_spatial = true;
  for (const json& term : terms) {
    if (field(term, "side").get<std::string>() != "spatial_matrix")
      all_spatial = false;
  }

  auto weight_of = [](const json& term) {
    const json& w = field(term, "weight");
    return Complex{field(w, "re").get<double>(), field(w, "im").get<double>()};
  };

  if (all_spatial) {
    require(group.kind == GroupKind::ZLex, errc::parse_error,
            "field 'side' = spatial_matrix requires a z_lex group");
    std::vector<std::pair<Complex, UnimodMatrix>> spatial;
    for (const json& term : terms) {
      const Automorphism a = automorphism_from_json(field(term, "automorphism"));
      spatial.emplace_back(weight_of(term), to_matrix(a, group.dim));
    }
    return HausdorffOperator::from_spatial_matrices(group.dim, spatial);
  }

  std::vector<OperatorTerm> dual;
  for (const json& term : terms) {
    const std::string side = field(term, "side").get<std::string>();
    Automorphism a = automorphism_from_json(field(term, "automorphism"));
    if (side == "dual") {
      dual.push_back({weight_of(term), std::move(a)});
    } else if (side == "spatial_matrix") {
      require(group.kind == GroupKind::ZLex, errc::parse_error,
              "field 'side' = spatial_matrix requires a z_lex group");
      const UnimodMatrix m = to_matrix(a, group.dim);
      UnimodMatrix transposed{m.dim,
                              std::vector<std::int64_t>(m.dim * m.dim, 0)};
      for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c) transposed.at(r, c) = m.at(c, r);
      dual.push_back({weight_of(term), invert(Automorphism{transposed})});
    } else {
      fail(errc::parse_error,
           "field 'side' must be 'dual' or 'spatial_matrix', got '" + side +
               "'");
    }
  }
  return HausdorffOperator::from_dual_terms(group, std::move(dual));
  });
}

std::string to_json_string(const DirichletPolynomial& d, int indent) {
  json out;
  out["n_max"] = d.n_max();
  json coeffs = json::array();
  for (const auto& [n, a] : d.coeffs())
    coeffs.push_back(json{{"n", n}, {"re", a.real()}, {"im", a.imag()}});
  out["coeffs"] = std::move(coeffs);
  return out.dump(indent);
}

DirichletPolynomial dirichlet_from_json(const std::string& text) {
  return guarded([&] {
  const json j = parse_text(text);
  DirichletPolynomial d(j.value("n_max", kDefaultNMax));
  for (const json& rec : field(j, "coeffs")) {
    d.add(field(rec, "n").get<std::int64_t>(),
          Complex{field(rec, "re").get<double>(),
                  field(rec, "im").get<double>()});
  }
  return d;
  });
}

std::string root_weights_to_json(const std::vector<RootWeight>& weights,
                                 int indent) {
  json out;
  json list = json::array();
  for (const RootWeight& w : weights) {
    list.push_back(json{{"q", w.q},
                        {"re", w.weight.real()},
                        {"im", w.weight.imag()}});
  }
  out["weights"] = std::move(list);
  return out.dump(indent);
}

std::vector<RootWeight> root_weights_from_json(const std::string& text) {
  return guarded([&] {
  const json j = parse_text(text);
  std::vector<RootWeight> out;
  for (const json& rec : field(j, "weights")) {
    RootWeight w;
    w.q = field(rec, "q").get<std::int64_t>();
    require(w.q >= 1, errc::parse_error, "field 'q' must be >= 1");
    w.weight = Complex{field(rec, "re").get<double>(),
                       field(rec, "im").get<double>()};
    out.push_back(w);
  }
  require(!out.empty(), errc::parse_error,
          "field 'weights' must be nonempty");
  return out;
  });
}

std::vector<SigmaWeight> sigma_weights_from_operator(
    const HausdorffOperator& h) {
  require(h.group().kind == GroupKind::ZInfLex, errc::invalid_argument,
          "sigma kernels act on z_inf_lex");
  std::vector<SigmaWeight> out;
  for (const OperatorTerm& t : h.terms()) {
    const auto* s = std::get_if<SigmaU>(&t.dual_map.value);
    require(s != nullptr && !s->inverted, errc::invalid_argument,
            "sigma kernels need forward sigma_u terms, got " +
                family_name(t.dual_map));
    out.push_back({s->u, t.weight});
  }
  return out;
}

std::string to_json_string(const VerificationReport& report, int indent) {
  json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  json checks = json::array();
  for (const CheckRecord& rec : report.checks) {
    json c{{"id", rec.id},
           {"anchor", rec.anchor},
           {"instances", rec.instances},
           {"max_deviation", rec.max_deviation},
           {"tolerance", rec.tolerance},
           {"pass", rec.pass}};
    if (rec.witness) c["witness"] = *rec.witness;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  out["wall_time_seconds"] = report.wall_time_seconds;
  return out.dump(indent);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::parse_error,
          "cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::parse_error,
          "cannot open " + path.string() + " for writing");
  out << text;
  require(out.good(), errc::parse_error, "write to " + path.string() +
                                             " failed");
}

bool operator==(const OperatorTerm& a, const OperatorTerm& b) {
  return a.weight == b.weight && a.dual_map == b.dual_map;
}

bool same_operator(const HausdorffOperator& a, const HausdorffOperator& b) {
  return a.group() == b.group() && a.terms() == b.terms();
}

}  // namespace haco
