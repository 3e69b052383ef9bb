#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "diracsym/cli.hpp"
#include "diracsym/dirac_spectrum.hpp"
#include "diracsym/errors.hpp"
#include "diracsym/f4_casimir.hpp"
#include "diracsym/holonomy.hpp"
#include "diracsym/representations.hpp"

namespace diracsym::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json weight_json(const Weight& w) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) arr.push_back(to_string(w[i]));
  return arr;
}

ordered_json indices_json(const std::vector<int>& idx) {
  ordered_json arr = ordered_json::array();
  for (int i : idx) arr.push_back(i + 1);  // 1-based, alpha_1..alpha_m
  return arr;
}

std::string subset_label(const std::vector<int>& subset) {
  if (subset.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i] + 1);
  }
  return s + "}";
}

std::string k_components_label(const RootSystem& k) {
  if (k.component_types.empty()) return "torus";
  std::string s;
  for (std::size_t i = 0; i < k.component_types.size(); ++i) {
    if (i) s += "x";
    s += k.component_types[i].name();
  }
  return s;
}

// Minimal aligned-table writer.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
      out << "\n";
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
};

// ---------------------------------------------------------------------------
// spectrum

ordered_json spectrum_json(const SymmetricPair& p, const SpectrumReport& r) {
  ordered_json j;
  j["space"] = p.name;
  j["group"] = p.rs.name;
  j["k_type"] = k_components_label(p.k);
  j["n"] = p.n_dim;
  j["m"] = p.m;
  j["structure"] = to_string(p.structure);
  j["kahler_also"] = p.kahler_also;
  j["spin"] = p.has_spin;
  ordered_json roots = ordered_json::array();
  for (int i = 0; i < p.m; ++i) roots.push_back(weight_json(p.noncompact_root(i)));
  j["noncompact_roots"] = std::move(roots);
  ordered_json pairings = ordered_json::array();
  for (const Rational& q : r.signs.pairings) pairings.push_back(to_string(q));
  j["delta_k_pairings"] = std::move(pairings);
  j["i_plus"] = indices_json(r.signs.i_plus);
  j["i_minus"] = indices_json(r.signs.i_minus);
  j["i_zero"] = indices_json(r.signs.i_zero);
  ordered_json members = ordered_json::array();
  for (const MinimalWeight& mw : r.family.members) {
    ordered_json m;
    m["subset"] = indices_json(mw.subset);
    m["beta"] = weight_json(mw.beta);
    m["half_spin"] = mw.half_spin == HalfSpin::plus ? "+" : "-";
    members.push_back(std::move(m));
  }
  j["minimal_weights"] = std::move(members);
  j["subset_count"] = r.family.subset_count;
  j["distinct_count"] = r.family.members.size();
  j["min_norm_sq"] = to_string(r.family.common_norm_sq);
  j["lambda_min_sq"] = to_string(r.lambda_min_sq);
  j["beta_g"] = weight_json(r.beta_g);
  j["casimir_crosscheck"] = to_string(r.casimir_crosscheck);
  j["friedrich_bound_sq"] = to_string(r.friedrich_bound_sq);
  if (r.structure_bound_sq)
    j["structure_bound_sq"] = to_string(*r.structure_bound_sq);
  else
    j["structure_bound_sq"] = nullptr;
  return j;
}

void spectrum_table(const SymmetricPair& p, const SpectrumReport& r,
                    std::ostream& out) {
  out << "space " << p.name << "  (G = " << p.rs.name
      << ", K = " << k_components_label(p.k) << ", n = " << p.n_dim
      << ", m = " << p.m << ", structure = " << to_string(p.structure)
      << (p.kahler_also ? " + kahler" : "") << ")\n";
  out << "sign classification (<delta_K, alpha_i>, Killing form):\n";
  Table t;
  t.header = {"i", "alpha_i", "pairing", "sign"};
  for (int i = 0; i < p.m; ++i) {
    const Rational& v = r.signs.pairings[i];
    t.rows.push_back({std::to_string(i + 1), to_string(p.noncompact_root(i)),
                      to_string(v), v > 0 ? "+" : v < 0 ? "-" : "0"});
  }
  t.print(out);
  out << "counts: #I+ = " << r.signs.i_plus.size()
      << ", #I- = " << r.signs.i_minus.size()
      << ", #I0 = " << r.signs.i_zero.size() << "\n";
  out << "minimal highest weights (common norm^2 = "
      << to_string(r.family.common_norm_sq) << ", " << r.family.members.size()
      << " distinct over " << r.family.subset_count << " subsets):\n";
  Table m;
  m.header = {"subset", "beta_I", "half-spin"};
  for (const MinimalWeight& mw : r.family.members)
    m.rows.push_back({subset_label(mw.subset), to_string(mw.beta),
                      mw.half_spin == HalfSpin::plus ? "Sigma+" : "Sigma-"});
  m.print(out);
  out << "lambda_min^2          = " << to_string(r.lambda_min_sq) << "\n";
  out << "beta^G                = " << to_string(r.beta_g) << "\n";
  out << "casimir crosscheck    = " << to_string(r.casimir_crosscheck) << "\n";
  out << "friedrich bound       = " << to_string(r.friedrich_bound_sq)
      << (r.lambda_min_sq == r.friedrich_bound_sq ? "  (equality: limiting)"
                                                  : "") << "\n";
  if (r.structure_bound_sq)
    out << "structure bound       = " << to_string(*r.structure_bound_sq)
        << (r.lambda_min_sq == *r.structure_bound_sq ? "  (equality: limiting)"
                                                     : "")
        << "\n";
}

// ---------------------------------------------------------------------------
// holonomy

ordered_json kahler_json(const KahlerReport& r) {
  ordered_json j;
  j["kind"] = "kahler";
  j["m"] = r.m;
  j["counts"] = {{"i_plus", r.count_plus},
                 {"i_minus", r.count_minus},
                 {"i_zero", r.count_zero}};
  ordered_json eps = ordered_json::array();
  for (int e : r.epsilon) eps.push_back(e);
  j["epsilon"] = std::move(eps);
  ordered_json members = ordered_json::array();
  for (const KahlerMember& m : r.members) {
    ordered_json e;
    e["subset"] = indices_json(m.subset);
    e["t"] = m.t;
    e["eigenvalue"] = std::to_string(m.t) + "*i";
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  j["min_abs_t"] = r.min_abs_t;
  j["fiberwise_min"] = r.fiberwise_min;
  j["balanced"] = r.balanced;
  j["criterion_met"] = r.criterion_met;
  return j;
}

ordered_json qk_json(const QkReport& r) {
  ordered_json j;
  j["kind"] = "quaternion_kahler";
  j["maximal_root"] = weight_json(r.maximal_root);
  j["counts"] = {{"i_plus", r.count_plus},
                 {"i_minus", r.count_minus},
                 {"i_zero", r.count_zero}};
  j["counting_identity"] = r.counting_identity;
  ordered_json members = ordered_json::array();
  for (const QkMember& m : r.members) {
    ordered_json e;
    e["subset"] = indices_json(m.subset);
    e["s"] = to_string(m.s);
    e["eigenvalue"] = to_string(m.s) + "*i";
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  j["criterion_met"] = r.criterion_met;
  ordered_json factors = ordered_json::array();
  for (const QkFactorAnalysis& f : r.other_factors) {
    ordered_json e;
    e["factor_root"] = weight_json(f.factor_root);
    ordered_json ms = ordered_json::array();
    for (const QkMember& m : f.members) {
      ordered_json x;
      x["subset"] = indices_json(m.subset);
      x["s"] = to_string(m.s);
      ms.push_back(std::move(x));
    }
    e["members"] = std::move(ms);
    e["criterion_met"] = f.criterion_met;
    factors.push_back(std::move(e));
  }
  j["other_rank1_factors"] = std::move(factors);
  return j;
}

ordered_json spin9_holonomy_json() {
  ordered_json j;
  j["kind"] = "spin9";
  CasimirArgmin am = casimir_argmin(4);
  j["c4_values"] = ordered_json::array();
  for (const Spin9Component& c : spin9_components()) {
    ordered_json e;
    e["beta"] = weight_json(c.highest_weight);
    e["dim"] = c.dim.get_str();
    e["c4"] = to_string(higher_casimir(c.highest_weight, 4));
    j["c4_values"].push_back(std::move(e));
  }
  j["argmin_c4"] = weight_json(am.minimizers.front());
  j["argmin_tie"] = am.tie;
  return j;
}

void holonomy_table(const SymmetricPair& p, std::ostream& out) {
  out << "space " << p.name << "  holonomy criteria\n";
  if (p.is_kahler()) {
    KahlerReport r = kahler_report(p);
    out << "kahler 2-form action on the minimal components (eigenvalue t*i):\n";
    Table t;
    t.header = {"subset", "t"};
    for (const KahlerMember& m : r.members)
      t.rows.push_back({subset_label(m.subset), std::to_string(m.t)});
    t.print(out);
    out << "counts (center-aligned): #I+ = " << r.count_plus
        << ", #I- = " << r.count_minus << ", #I0 = " << r.count_zero << "\n";
    out << "balance #I+ = #I-      : " << (r.balanced ? "holds" : "FAILS") << "\n";
    out << "min |t| = " << r.min_abs_t << " vs fiberwise minimum "
        << r.fiberwise_min << "\n";
    out << "kahler criterion       : " << (r.criterion_met ? "met" : "NOT met")
        << "\n";
  }
  if (p.structure == Structure::quaternion_kahler) {
    QkReport r = qk_report(p);
    out << "quaternionic Sp1 factor root beta = " << to_string(r.maximal_root)
        << "\n";
    out << "pairings s_I = 2<beta_I,beta>/|beta|^2 (4-form eigenvalue s*i on "
           "the rescaled operator):\n";
    Table t;
    t.header = {"subset", "s"};
    for (const QkMember& m : r.members)
      t.rows.push_back({subset_label(m.subset), to_string(m.s)});
    t.print(out);
    out << "counts: #I+ = " << r.count_plus << ", #I- = " << r.count_minus
        << ", #I0 = " << r.count_zero << "\n";
    out << "counting identity #I- + #I0 = #I+ : "
        << (r.counting_identity ? "holds" : "FAILS") << "\n";
    out << "qk criterion (some s_I = 0)       : "
        << (r.criterion_met ? "met" : "NOT met") << "\n";
    for (const QkFactorAnalysis& f : r.other_factors) {
      out << "other Sp1 factor " << to_string(f.factor_root)
          << " (not the quaternionic one): criterion "
          << (f.criterion_met ? "met" : "NOT met") << ", s values";
      for (const QkMember& m : f.members) out << " " << to_string(m.s);
      out << "\n";
    }
  }
  if (p.structure == Structure::spin9) {
    out << "spin9 holonomy link through the order-4 Casimir:\n";
    Table t;
    t.header = {"beta_i", "dim", "c4"};
    for (const Spin9Component& c : spin9_components())
      t.rows.push_back({to_string(c.highest_weight), c.dim.get_str(),
                        to_string(higher_casimir(c.highest_weight, 4))});
    t.print(out);
    CasimirArgmin am = casimir_argmin(4);
    out << "argmin c4 = " << to_string(am.minimizers.front())
        << (am.tie ? " (tie)" : "") << "\n";
  }
}

// ---------------------------------------------------------------------------
// casimir

ordered_json casimir_json(const CasimirTable& t) {
  ordered_json j;
  j["space"] = "F4_Spin9";
  ordered_json comp = ordered_json::array();
  for (const Weight& b : t.components) comp.push_back(weight_json(b));
  j["components"] = std::move(comp);
  ordered_json orders = ordered_json::array();
  for (int k : t.orders) orders.push_back(k);
  j["orders"] = std::move(orders);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (const Rational& v : t.values[i]) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  ordered_json verified = ordered_json::array();
  for (bool b : t.verified) verified.push_back(b);
  j["verified"] = std::move(verified);
  ordered_json argmins = ordered_json::array();
  for (int k : t.orders) {
    CasimirArgmin am = casimir_argmin(k);
    ordered_json e;
    e["order"] = k;
    e["min_value"] = to_string(am.min_value);
    ordered_json mins = ordered_json::array();
    for (const Weight& w : am.minimizers) mins.push_back(weight_json(w));
    e["minimizers"] = std::move(mins);
    e["tie"] = am.tie;
    argmins.push_back(std::move(e));
  }
  j["argmin"] = std::move(argmins);
  return j;
}

void casimir_table_out(const CasimirTable& t, std::ostream& out) {
  Table tab;
  tab.header = {"order"};
  for (const Weight& b : t.components) tab.header.push_back(to_string(b));
  tab.header.push_back("note");
  for (std::size_t k = 0; k < t.orders.size(); ++k) {
    std::vector<std::string> row = {"c_" + std::to_string(t.orders[k])};
    for (std::size_t i = 0; i < t.values.size(); ++i)
      row.push_back(to_string(t.values[i][k]));
    row.push_back(t.verified[k] ? "" : "unverified");
    tab.rows.push_back(std::move(row));
  }
  tab.print(out);
  for (int k : t.orders) {
    CasimirArgmin am = casimir_argmin(k);
    out << "argmin c_" << k << " = ";
    if (am.tie)
      out << "tie at " << to_string(am.min_value);
    else
      out << to_string(am.minimizers.front()) << " (value "
          << to_string(am.min_value) << ")";
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyResult {
  std::string space;
  std::string check;
  bool passed;
  std::string witness;
};

class Verifier {
 public:
  explicit Verifier(long long weyl_cap) : weyl_cap_(weyl_cap) {}

  std::vector<VerifyResult> results;

  void add(const std::string& space, const std::string& check, bool passed,
           std::string witness = "") {
    results.push_back({space, check, passed, passed ? "" : std::move(witness)});
  }

  void guarded(const SymmetricPair& p, const std::string& check,
               const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, witness] = body();
      add(p.name, check, ok, std::move(witness));
    } catch (const Error& e) {
      add(p.name, check, false, e.what());
    }
  }

  void verify_entry(const SymmetricPair& p) {
    guarded(p, "strange_formula", [&] {
      bool ok = strange_formula_check(p.rs.killing_product, p.rs.delta, p.rs.dim_g);
      return std::pair(ok, "norm " + to_string(norm_sq(p.rs.killing_product, p.rs.delta)));
    });
    guarded(p, "half_sums", [&] {
      bool ok = p.delta_k + p.delta_p == p.rs.delta;
      return std::pair(ok, std::string("delta_K + delta_p != delta_G"));
    });
    guarded(p, "minimal_family", [&] {
      MinimalWeightFamily f = minimal_highest_weights(p);
      return std::pair(!f.members.empty(),
                       std::string("no minimal highest weights"));
    });
    guarded(p, "eigenvalue_crosscheck", [&] {
      Rational direct = first_eigenvalue_squared(p);
      Rational casimir = casimir_crosscheck(p);
      return std::pair(direct == casimir,
                       to_string(direct) + " vs " + to_string(casimir));
    });
    guarded(p, "friedrich_bound", [&] {
      Rational l = first_eigenvalue_squared(p);
      Rational bound = friedrich_bound_sq(p.n_dim);
      bool expect_equality = p.name == "HP1";
      bool ok = expect_equality ? l == bound : l > bound;
      return std::pair(ok, "lambda^2 = " + to_string(l) + ", bound = " +
                               to_string(bound) +
                               (expect_equality ? " (equality expected)" : ""));
    });
    guarded(p, "structure_bound", [&] {
      std::optional<Rational> bound = structure_bound_sq(p);
      if (!bound) return std::pair(true, std::string());
      Rational l = first_eigenvalue_squared(p);
      return std::pair(l >= *bound, "lambda^2 = " + to_string(l) +
                                        " below bound " + to_string(*bound));
    });
    if (p.is_kahler()) {
      guarded(p, "kahler_balance", [&] {
        KahlerReport r = kahler_report(p);
        return std::pair(r.balanced, std::to_string(r.count_plus) + " vs " +
                                         std::to_string(r.count_minus));
      });
      guarded(p, "kahler_criterion", [&] {
        KahlerReport r = kahler_report(p);
        return std::pair(r.criterion_met && r.min_abs_t == r.fiberwise_min,
                         "min |t| = " + std::to_string(r.min_abs_t));
      });
    }
    if (p.structure == Structure::quaternion_kahler) {
      guarded(p, "qk_wolf", [&] {
        qk_structure(p);
        return std::pair(true, std::string());
      });
      guarded(p, "qk_counting", [&] {
        QkReport r = qk_report(p);
        bool expected = p.name != "G2_SO4";
        bool ok = r.counting_identity == expected;
        if (p.name == "G2_SO4")
          ok = ok && r.count_plus == 3 && r.count_minus == 0 && r.count_zero == 1;
        return std::pair(ok, "counts (" + std::to_string(r.count_plus) + "," +
                                 std::to_string(r.count_minus) + "," +
                                 std::to_string(r.count_zero) + ")");
      });
      guarded(p, "qk_criterion", [&] {
        QkReport r = qk_report(p);
        // s_{I0} = 0 exactly when the counting identity holds.
        return std::pair(r.criterion_met == r.counting_identity,
                         std::string("criterion vs counting identity mismatch"));
      });
    }
    if (p.rs.weyl_order <= weyl_cap_) {
      try {
        OracleReport oracle = parthasarathy_oracle(p, weyl_cap_);
        for (const auto& [name, c] : oracle.checks)
          add(p.name, "oracle." + name, c.passed, c.witness);
      } catch (const Error& e) {
        add(p.name, "oracle", false, e.what());
      }
      if (p.m <= 12) {
        guarded(p, "spin_weight_tiling", [&] {
          OracleCheck c = spin_weight_tiling(p, weyl_cap_);
          return std::pair(c.passed, c.witness);
        });
      }
    }
    if (p.name == "F4_Spin9") verify_f4(p);
    if (p.name == "G2_SO4") verify_g2(p);
  }

  void verify_f4(const SymmetricPair& p) {
    guarded(p, "f4.lambda_min", [&] {
      Rational l = first_eigenvalue_squared(p);
      return std::pair(l == Rational(7, 3), "lambda^2 = " + to_string(l));
    });
    guarded(p, "f4.casimir_table", [&] {
      CasimirTable t = casimir_table({0, 1, 2, 3, 4});
      auto row = [&](int k) {
        std::vector<Rational> r;
        for (std::size_t i = 0; i < 3; ++i) r.push_back(t.values[i][static_cast<std::size_t>(k)]);
        return r;
      };
      bool ok = row(0) == std::vector<Rational>{9, 9, 9} &&
                row(1) == std::vector<Rational>{0, 0, 0} &&
                row(2) == std::vector<Rational>{36, 36, 36} &&
                row(3) == std::vector<Rational>{-126, -126, -126} &&
                row(4) == std::vector<Rational>{Rational(1863, 2), 684, 1404};
      return std::pair(ok, std::string("casimir table deviates"));
    });
    guarded(p, "f4.argmin_link", [&] {
      CasimirArgmin am = casimir_argmin(4);
      MinimalWeightFamily f = minimal_highest_weights(p);
      SignClassification s = classify_noncompact(p);
      const MinimalWeight* full = nullptr;
      for (const MinimalWeight& mw : f.members)
        if (mw.subset == s.i_zero) full = &mw;
      bool ok = !am.tie && full && am.minimizers.front() == full->beta;
      return std::pair(ok, std::string("argmin c4 is not beta_{I0}"));
    });
  }

  void verify_g2(const SymmetricPair& p) {
    guarded(p, "g2.casimir_constant", [&] {
      Rational v = norm_sq(p.rs.killing_product, p.rs.delta) -
                   norm_sq(p.rs.killing_product, p.delta_k);
      return std::pair(v == Rational(1, 2), to_string(v));
    });
    guarded(p, "g2.lambda_min", [&] {
      Rational l = first_eigenvalue_squared(p);
      return std::pair(l == Rational(3, 2), to_string(l));
    });
    guarded(p, "g2.oracle_weights", [&] {
      OracleReport oracle = parthasarathy_oracle(p, weyl_cap_);
      auto w = [](long a, long b) {
        Weight v(2);
        v[0] = a;
        v[1] = b;
        return v;
      };
      std::set<Weight, WeightLess> got(oracle.all_beta_w.begin(),
                                       oracle.all_beta_w.end());
      std::set<Weight, WeightLess> expected{w(4, 0), w(0, 2), w(3, 1)};
      bool ok = oracle.w_set_size == 3 && got == expected;
      return std::pair(ok, std::string("|W| = ") + std::to_string(oracle.w_set_size));
    });
    guarded(p, "g2.qk_values", [&] {
      QkReport r = qk_report(p);
      bool ok = !r.criterion_met && r.members.size() == 2 &&
                r.members[0].s == 2 && r.members[1].s == 1;
      return std::pair(ok, std::string("s values deviate"));
    });
    guarded(p, "g2.casimir_split", [&] {
      G2CasimirSplit split = g2_casimir_split();
      bool ok = split.rows.size() == 3;
      for (const G2SplitRow& row : split.rows) {
        ok = ok && row.c1 == Rational(row.k1 * (row.k1 + 2), 48);
        ok = ok && row.c2 == Rational(row.k2 * (row.k2 + 2), 16);
        ok = ok && row.c1 + row.c2 == Rational(1, 2);
        ok = ok && row.omega_value == 64 * row.c1 - 20;
      }
      const auto& rows = split.rows;
      ok = ok && rows[split.trivial_first_factor_row].k1 == 0;
      ok = ok && rows[split.trivial_second_factor_row].k2 == 0;
      // The k1 = 0 component is the beta_empty = 2 w2 one tied to lambda_min.
      Weight two_w2(2);
      two_w2[0] = 0;
      two_w2[1] = 2;
      ok = ok && rows[split.trivial_first_factor_row].highest_weight == two_w2;
      return std::pair(ok, std::string("split table deviates"));
    });
  }

 private:
  long long weyl_cap_;
};

int run_verify(const CommandConfig& config, const Catalog& catalog,
               std::ostream& out) {
  Verifier verifier(config.weyl_cap);
  std::vector<std::string> names;
  if (config.space) {
    catalog.at(*config.space);  // throws on unknown space
    names.push_back(*config.space);
  } else {
    names = catalog.order;
  }
  for (const std::string& name : names)
    verifier.verify_entry(catalog.at(name));

  bool all = true;
  for (const VerifyResult& r : verifier.results) all = all && r.passed;

  if (config.output == OutputMode::json) {
    ordered_json j;
    j["results"] = ordered_json::array();
    for (const VerifyResult& r : verifier.results) {
      ordered_json e;
      e["space"] = r.space;
      e["check"] = r.check;
      e["passed"] = r.passed;
      if (!r.witness.empty()) e["witness"] = r.witness;
      j["results"].push_back(std::move(e));
    }
    j["checks"] = verifier.results.size();
    j["all_passed"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const VerifyResult& r : verifier.results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.space << "." << r.check;
      if (!r.witness.empty()) out << ": " << r.witness;
      out << "\n";
    }
    out << (all ? "OK" : "FAILED") << " (" << verifier.results.size()
        << " checks)\n";
  }
  return all ? exit_ok : exit_verification_failure;
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    bool needs_space = config.command == Command::spectrum ||
                       config.command == Command::holonomy ||
                       config.command == Command::casimir;
    if (needs_space && !config.space)
      throw ParseError("this command requires --space");
    Catalog catalog = config.catalog_path ? load_catalog_file(*config.catalog_path)
                                          : builtin_catalog();
    switch (config.command) {
      case Command::catalog: {
        if (config.export_path) {
          std::ofstream f(*config.export_path);
          if (!f)
            throw ParseError("cannot write '" + *config.export_path + "'");
          f << catalog_to_json(catalog);
        }
        if (config.output == OutputMode::json) {
          ordered_json j;
          j["entries"] = ordered_json::array();
          for (const std::string& name : catalog.order) {
            const SymmetricPair& p = catalog.entries.at(name);
            ordered_json e;
            e["name"] = p.name;
            e["group"] = p.rs.name;
            e["k_type"] = k_components_label(p.k);
            e["n"] = p.n_dim;
            e["m"] = p.m;
            e["structure"] = to_string(p.structure);
            e["kahler_also"] = p.kahler_also;
            e["spin"] = p.has_spin;
            e["spin_source"] = p.spin_source == SpinSource::paper_table
                                   ? "paper_table"
                                   : "asserted";
            e["weyl_order"] = p.rs.weyl_order;
            j["entries"].push_back(std::move(e));
          }
          out << j.dump(2) << "\n";
        } else {
          Table t;
          t.header = {"name", "G", "K", "n", "m", "structure", "spin"};
          for (const std::string& name : catalog.order) {
            const SymmetricPair& p = catalog.entries.at(name);
            t.rows.push_back({p.name, p.rs.name, k_components_label(p.k),
                              std::to_string(p.n_dim), std::to_string(p.m),
                              to_string(p.structure) +
                                  (p.kahler_also ? "+kahler" : ""),
                              p.has_spin ? "yes" : "no"});
          }
          t.print(out);
        }
        return exit_ok;
      }
      case Command::spectrum: {
        const SymmetricPair& p = catalog.at(*config.space);
        SpectrumReport r = spectrum_report(p);
        if (config.output == OutputMode::json)
          out << spectrum_json(p, r).dump(2) << "\n";
        else
          spectrum_table(p, r, out);
        return exit_ok;
      }
      case Command::holonomy: {
        const SymmetricPair& p = catalog.at(*config.space);
        if (p.structure == Structure::none && !p.kahler_also)
          throw NotKahler(p.name + " carries no holonomy structure flag");
        if (config.output == OutputMode::json) {
          ordered_json j;
          j["space"] = p.name;
          j["reports"] = ordered_json::array();
          if (p.is_kahler()) j["reports"].push_back(kahler_json(kahler_report(p)));
          if (p.structure == Structure::quaternion_kahler)
            j["reports"].push_back(qk_json(qk_report(p)));
          if (p.structure == Structure::spin9)
            j["reports"].push_back(spin9_holonomy_json());
          out << j.dump(2) << "\n";
        } else {
          holonomy_table(p, out);
        }
        return exit_ok;
      }
      case Command::casimir: {
        const SymmetricPair& p = catalog.at(*config.space);
        if (p.structure != Structure::spin9)
          throw ParseError("casimir tables are specific to the spin9 entry "
                           "F4_Spin9; got '" + p.name + "'");
        std::vector<int> orders = config.orders;
        if (orders.empty()) orders = {2, 3, 4};
        for (int k : orders)
          if (k < 0) throw ParseError("casimir orders must be >= 0");
        CasimirTable t = casimir_table(orders);
        if (config.output == OutputMode::json)
          out << casimir_json(t).dump(2) << "\n";
        else
          casimir_table_out(t, out);
        return exit_ok;
      }
      case Command::verify:
        return run_verify(config, catalog, out);
    }
    return exit_input_error;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_cap_exceeded;
  } catch (const AssertionFailure& e) {
    err << "invariant falsified: " << e.what() << "\n";
    return exit_verification_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}

}  // namespace diracsym::cli
