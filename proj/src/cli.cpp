#include "g2fp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "g2fp/basis.hpp"
#include "g2fp/gring.hpp"
#include "g2fp/localize.hpp"

namespace g2fp {

bool Report::passed() const {
  for (const auto& s : sections) {
    for (const auto& c : s.checks) {
      if (!c.pass) return false;
    }
  }
  return true;
}

namespace {

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, e] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + render(e);
    return s;
  }
  return v.dump();
}

Json string_array(std::span<const BigInt> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << ": " << headline << "\n";
  for (const auto& s : sections) {
    os << "[" << s.title << "]\n";
    for (const auto& c : s.checks) {
      os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    }
    for (const auto& [k, v] : s.values) os << "  " << k << ": " << render(v) << "\n";
  }
  os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json Report::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["headline"] = headline;
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    Json values = Json::object();
    for (const auto& [k, v] : s.values) values[k] = v;
    secs.push_back(Json{{"title", s.title}, {"checks", checks}, {"values", values}});
  }
  doc["sections"] = secs;
  doc["pass"] = passed();
  return doc;
}

namespace {

ReportSection invariants_section(const FixedPointData& data) {
  ReportSection s{"invariants", {}, {}};
  for (std::size_t i = 0; i < data.size(); ++i) {
    PointInvariants inv = point_invariants(data, i);
    Json row;
    row["phi"] = to_string(data[i].phi);
    row["weights"] = format_weights(data[i].weights);
    row["index"] = std::to_string(2 * data[i].negative_count());
    row["Gamma"] = to_string(inv.gamma);
    row["Lambda"] = to_string(inv.lambda_full);
    row["Lambda-"] = to_string(inv.lambda_minus);
    row["Lambda+"] = to_string(inv.lambda_plus);
    s.values.emplace_back("P" + std::to_string(i), std::move(row));
  }
  bool standard = false;
  try {
    standard = has_standard_weights(data);
  } catch (const Error&) {
  }
  s.values.emplace_back("standard weights", standard ? "yes" : "no");
  return s;
}

std::string format_expansion(const BasisExpansion& e) {
  std::string s;
  for (std::size_t k = 0; k < e.terms.size(); ++k) {
    const TMonomial& m = e.terms[k];
    if (m.is_zero()) continue;
    const bool negative = sgn(m.coeff()) < 0;
    const std::string mag = to_string(TMonomial(abs(m.coeff()), m.degree()));
    if (s.empty()) {
      s = (negative ? "-" : "") + mag;
    } else {
      s += (negative ? " - " : " + ") + mag;
    }
    s += " alpha_" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

ReportSection localization_section(const FixedPointData& data, bool zero_weights) {
  ReportSection s{"localization", {}, {}};
  if (zero_weights) {
    s.checks.push_back({"localization", false, "skipped: a weight is zero"});
    return s;
  }
  const EquivClass u = build_u_tilde(data);
  std::string failure;
  for (int a = 0; a < data.n() && failure.empty(); ++a) {
    try {
      integrate(data, power(u, static_cast<unsigned>(a)));
    } catch (const NotAManifold& e) {
      failure = "a = " + std::to_string(a) + ": " + e.what();
    }
  }
  s.checks.push_back({"u-tilde-vanishing", failure.empty(),
                      failure.empty() ? "integral of u~^a is 0 for a = 0.." +
                                            std::to_string(data.n() - 1)
                                      : failure});
  const BigRational chi = integrate(data, chern_restriction(data, data.n())).coeff();
  s.checks.push_back({"euler-characteristic", chi == data.n() + 2,
                      "chi = " + to_string(chi) + ", expected " + std::to_string(data.n() + 2)});
  s.values.emplace_back("integral of u~^" + std::to_string(data.n()),
                        to_string(integrate(data, power(u, static_cast<unsigned>(data.n()))).coeff()));
  s.values.emplace_back("chi", to_string(chi));
  try {
    const BasisRestrictions basis = build_basis(data);
    const BasisExpansion c1 = express_in_basis(data, basis, chern_restriction(data, 1));
    std::string text = to_string(c1.terms[1].coeff()) + "x";
    for (std::size_t k = 2; k < c1.terms.size(); ++k) {
      if (!c1.terms[k].is_zero()) text = format_expansion(c1);
    }
    s.values.emplace_back("c_1", text);
  } catch (const Error& e) {
    s.values.emplace_back("c_1", std::string("unavailable: ") + e.what());
  }
  try {
    Json b = Json::array();
    for (int r : betti(data.n())) b.push_back(r);
    s.values.emplace_back("betti", b);
  } catch (const Error&) {
  }
  return s;
}

std::string partition_label(const std::vector<int>& parts) {
  std::string s;
  for (int p : parts) s += (s.empty() ? "c" : "*c") + std::to_string(p);
  return s;
}

ReportSection basis_section(const FixedPointData& data, const BasisRestrictions& basis) {
  ReportSection s{"basis", {}, {}};
  bool integral = true;
  for (std::size_t i = 0; i < basis.rows.size(); ++i) {
    Json row = Json::array();
    for (const auto& m : basis.rows[i]) {
      row.push_back(to_string(m));
      if (!is_integer(m.coeff())) integral = false;
    }
    s.values.emplace_back("alpha_" + std::to_string(i), std::move(row));
  }
  s.checks.push_back({"basis-integral", integral,
                      integral ? "every restriction is integral"
                               : "some restriction is not integral"});
  std::string bad;
  for (int i = 1; i <= data.n(); ++i) {
    if (!express_in_basis(data, basis, chern_restriction(data, i)).integral) {
      bad += (bad.empty() ? "c_" : ", c_") + std::to_string(i);
    }
  }
  s.checks.push_back({"chern-expansions-integral", bad.empty(),
                      bad.empty() ? "c_1 .. c_n expand with integer coefficients"
                                  : "non-integral: " + bad});
  return s;
}

ReportSection chern_section(const FixedPointData& data, const BasisRestrictions& basis) {
  ReportSection s{"chern", {}, {}};
  for (int i = 1; i <= data.n(); ++i) {
    s.values.emplace_back("c_" + std::to_string(i) + "^S1",
                          format_expansion(express_in_basis(data, basis, chern_restriction(data, i))));
  }
  const BasisExpansion c1 = express_in_basis(data, basis, chern_restriction(data, 1));
  const BigRational a1 = c1.terms.size() > 1 ? c1.terms[1].coeff() : BigRational(0);
  s.checks.push_back({"c1-alpha1-coefficient", a1 == data.n(),
                      "coefficient of alpha_1 in c_1 is " + to_string(a1) + ", expected n = " +
                          std::to_string(data.n())});

  bool all_integral = true;
  Json numbers;
  for (const auto& p : partitions(data.n())) {
    BigRational v = chern_number(data, p);
    if (!is_integer(v)) all_integral = false;
    numbers[partition_label(p)] = to_string(v);
  }
  s.values.emplace_back("chern numbers", numbers);
  s.checks.push_back({"chern-numbers-integral", all_integral,
                      all_integral ? "all Chern numbers are integers"
                                   : "a Chern number is not an integer"});

  try {
    const RingTable table = ring_make(data.n());
    const auto classes = ordinary_chern(data, basis, table);
    s.checks.push_back({"ring-identification", true,
                        "integral cohomology ring matches the model ring"});
    for (std::size_t i = 0; i < classes.size(); ++i) {
      s.values.emplace_back("c_" + std::to_string(i + 1) + "(M)", format(table, classes[i]));
    }
    const RingElement x = x_power_element(table, 1);
    std::string c1_text = "not a multiple of x";
    for (const BigInt& k : {a1.get_num()}) {
      if (is_integer(a1) && ring_scale(k, x) == classes[0]) c1_text = to_string(k) + "x";
    }
    s.values.emplace_back("c_1(M) in x", c1_text);
  } catch (const Error& e) {
    s.checks.push_back({"ring-identification", false, e.what()});
  }
  return s;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m) rows.push_back(string_array(r));
  return rows;
}

ReportSection pairing_section(const FixedPointData& data, const BasisRestrictions& basis) {
  ReportSection s{"pairing", {}, {}};
  const IntMatrix p = pairing_matrix(data, basis);
  const std::size_t m = static_cast<std::size_t>(data.half());
  const IntMatrix block{{p[m][m], p[m][m + 1]}, {p[m + 1][m], p[m + 1][m + 1]}};
  const BigInt det = block[0][0] * block[1][1] - block[0][1] * block[1][0];
  s.values.emplace_back("matrix", matrix_json(p));
  s.values.emplace_back("middle block", matrix_json(block));
  s.values.emplace_back("middle determinant", to_string(det));
  s.checks.push_back({"pairing-unimodular", det == 1 || det == -1,
                      "middle determinant " + to_string(det)});
  try {
    const RingTable table = ring_make(data.n());
    const RingIdentification id = identify_ring(data, basis, table);
    const RingElement y = table.basis_element(table.y());
    const RingElement z = table.basis_element(table.z());
    const IntMatrix ring_block{{ring_pairing(table, y, y), ring_pairing(table, y, z)},
                               {ring_pairing(table, z, y), ring_pairing(table, z, z)}};
    // Congruence A^T P A with A = images of (y, z) in the middle coordinates.
    const std::vector<std::vector<BigInt>> a{{id.images[table.y()][m], id.images[table.z()][m]},
                                             {id.images[table.y()][m + 1], id.images[table.z()][m + 1]}};
    IntMatrix congruent(2, std::vector<BigInt>(2, BigInt(0)));
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::size_t j = 0; j < 2; ++j) congruent[r][c] += a[i][r] * block[i][j] * a[j][c];
        }
      }
    }
    s.values.emplace_back("ring middle block (y, z)", matrix_json(ring_block));
    s.checks.push_back({"ring-pairing", congruent == ring_block,
                        "middle block is congruent to the ring pairing on (y, z)"});
  } catch (const Error& e) {
    s.checks.push_back({"ring-pairing", false, e.what()});
  }
  return s;
}

}  // namespace

Report verify_report(const FixedPointData& data, const VerifyOptions& options) {
  Report r{"verify", "n = " + std::to_string(data.n()) + ", " + std::to_string(data.size()) +
                         " fixed points",
           {}};
  const ValidationReport v = validate(data);
  ReportSection sv{"validate", {}, {}};
  for (const auto& e : v.entries) sv.checks.push_back({e.name, e.pass, e.detail});
  r.sections.push_back(std::move(sv));
  r.sections.push_back(invariants_section(data));

  const bool zero_weights = !v.find(check::kNonzeroWeights)->pass;
  r.sections.push_back(localization_section(data, zero_weights));

  if (!(options.basis || options.chern || options.pairing)) return r;
  if (zero_weights) {
    r.sections.push_back({"basis", {{"basis", false, "skipped: a weight is zero"}}, {}});
    return r;
  }
  std::optional<BasisRestrictions> basis;
  try {
    basis = build_basis(data);
  } catch (const Error& e) {
    r.sections.push_back({"basis", {{"basis", false, e.what()}}, {}});
    return r;
  }
  auto guarded = [&](const char* title, auto&& make) {
    try {
      r.sections.push_back(make());
    } catch (const Error& e) {
      r.sections.push_back({title, {{title, false, e.what()}}, {}});
    }
  };
  if (options.basis) guarded("basis", [&] { return basis_section(data, *basis); });
  if (options.chern) guarded("chern", [&] { return chern_section(data, *basis); });
  if (options.pairing) guarded("pairing", [&] { return pairing_section(data, *basis); });
  return r;
}

Report classify_report(const MomentProfile& profile, const BigInt& weight_bound) {
  std::string phi;
  for (const auto& v : profile.values()) phi += (phi.empty() ? "" : ", ") + to_string(v);
  Report r{"classify",
           "n = " + std::to_string(profile.n()) + ", phi = (" + phi + "), weight bound " +
               to_string(weight_bound),
           {}};

  ReportSection sp{"products", {}, {}};
  try {
    const auto products = predicted_products(profile);
    for (std::size_t i = 0; i < products.size(); ++i) {
      Json row;
      row["Lambda-"] = to_string(products[i].minus);
      row["Lambda+"] = to_string(products[i].plus);
      sp.values.emplace_back("P" + std::to_string(i), std::move(row));
    }
  } catch (const Error& e) {
    sp.values.emplace_back("no integral weight products", e.what());
  }
  r.sections.push_back(std::move(sp));

  const ClassificationVerdict verdict = classify(profile, weight_bound);
  ReportSection sc{"candidates", {}, {}};
  const std::size_t k = verdict.candidates.size();
  std::string summary = std::to_string(k) + (k == 1 ? " candidate" : " candidates");
  if (k > 0) summary += std::string(", standard: ") + (verdict.is_unique_standard ? "yes" : "no");
  sc.checks.push_back({"unique-standard", verdict.is_unique_standard, summary});
  for (std::size_t c = 0; c < k; ++c) {
    Json row = Json::array();
    for (const auto& p : verdict.candidates[c].points()) row.push_back(format_weights(p.weights));
    sc.values.emplace_back("candidate " + std::to_string(c + 1), std::move(row));
  }
  r.sections.push_back(std::move(sc));

  ReportSection ss{"symmetry", {}, {}};
  ss.values.emplace_back("symmetric", check_symmetry(profile) ? "yes" : "no");
  r.sections.push_back(std::move(ss));
  return r;
}

std::vector<BigInt> parse_integer_list(const std::string& csv) {
  std::vector<BigInt> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    out.push_back(parse_bigint(item));
  }
  if (out.empty()) throw MalformedScalar("empty integer list");
  return out;
}

int cmd_generate(const std::string& b_csv, const std::optional<std::string>& out_path,
                 std::ostream& out, std::ostream& err) {
  try {
    const FixedPointData data = make_standard_g2(parse_integer_list(b_csv));
    const std::string text = to_json(data).dump(2) + "\n";
    if (out_path) {
      std::ofstream f(*out_path);
      if (!f) throw MalformedData("cannot write " + *out_path);
      f << text;
    } else {
      out << text;
    }
    return kExitPass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const std::string& in_path, const VerifyOptions& options, bool json,
               std::ostream& out, std::ostream& err) {
  std::optional<FixedPointData> data;
  try {
    data = parse_data_file(read_json_file(in_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Report r = verify_report(*data, options);
  out << (json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.passed() ? kExitPass : kExitCheckFailed;
}

int cmd_classify(const std::string& in_path, const std::optional<std::string>& bound, bool json,
                 std::ostream& out, std::ostream& err) {
  std::optional<MomentProfile> profile;
  BigInt weight_bound;
  try {
    profile = parse_profile(read_json_file(in_path));
    weight_bound = bound ? parse_bigint(*bound) : default_weight_bound(*profile);
    if (sgn(weight_bound) <= 0) throw MalformedScalar("--bound must be positive");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Report r = classify_report(*profile, weight_bound);
  out << (json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace g2fp
