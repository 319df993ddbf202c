#include "snbound/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace snbound {

namespace {

using nlohmann::json;

std::string at(const std::string& base, const std::string& key) {
  return base + "/" + key;
}
std::string at(const std::string& base, size_t index) {
  return base + "/" + std::to_string(index);
}

const json& require_field(const json& obj, const std::string& key,
                          const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(at(path, key), "missing field");
  return obj.at(key);
}

Index parse_dim(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(at(path, key), "expected a positive integer");
  return v.get<Index>();
}

Complex parse_complex(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError(path, "expected a [re, im] pair");
  return {v[0].get<double>(), v[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& v, Index rows, Index cols,
                           const std::string& path) {
  if (!v.is_array() || static_cast<Index>(v.size()) != rows)
    throw ParseError(path, "expected " + std::to_string(rows) + " rows");
  ComplexMatrix M(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<size_t>(i)];
    const std::string row_path = at(path, static_cast<size_t>(i));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(row_path, "expected " + std::to_string(cols) + " columns");
    for (Index j = 0; j < cols; ++j)
      M(i, j) = parse_complex(row[static_cast<size_t>(j)],
                              at(row_path, static_cast<size_t>(j)));
  }
  return M;
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& M) {
  json rows = json::array();
  for (Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < M.cols(); ++j) row.push_back(complex_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

StateVariant parse_state(const json& doc) {
  const std::string kind = [&] {
    const json& k = require_field(doc, "kind", "");
    if (!k.is_string()) throw ParseError("/kind", "expected a string");
    return k.get<std::string>();
  }();

  const Index m = parse_dim(doc, "m", "");
  const Index n = parse_dim(doc, "n", "");

  if (kind == "ensemble") {
    const json& members = require_field(doc, "members", "");
    if (!members.is_array() || members.empty())
      throw ParseError("/members", "expected a non-empty array");
    std::vector<WeightedEnsemble::Member> parsed;
    for (size_t k = 0; k < members.size(); ++k) {
      const std::string mpath = at("/members", k);
      const json& mem = members[k];
      const json& w = require_field(mem, "weight", mpath);
      if (!w.is_number()) throw ParseError(at(mpath, "weight"), "expected a number");
      const ComplexMatrix coeffs = parse_matrix(require_field(mem, "coeffs", mpath),
                                                m, n, at(mpath, "coeffs"));
      try {
        parsed.push_back({w.get<double>(), PureState(coeffs)});
      } catch (const InvalidInput& err) {
        throw ParseError(mpath, err.what());
      }
    }
    try {
      return WeightedEnsemble(m, n, std::move(parsed));
    } catch (const InvalidInput& err) {
      throw ParseError("/members", err.what());
    }
  }

  if (kind == "density") {
    const ComplexMatrix mat = parse_matrix(require_field(doc, "matrix", ""),
                                           m * n, m * n, "/matrix");
    try {
      DensityMatrix rho(m, n, mat);
      if (auto bad = validate_density(rho))
        throw ParseError("/matrix", "density violates " + *bad);
      return rho;
    } catch (const InvalidInput& err) {
      throw ParseError("/matrix", err.what());
    }
  }

  throw ParseError("/kind", "unknown kind \"" + kind + "\"");
}

json tolerance_json(const ToleranceConfig& tol) {
  return {{"rank_rel", tol.rank_rel}, {"zero_abs", tol.zero_abs}};
}

}  // namespace

StateVariant parse_state_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError("", std::string("malformed JSON: ") + err.what());
  }
  return parse_state(doc);
}

StateVariant parse_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_text(buffer.str());
}

std::string to_json_text(const WeightedEnsemble& e) {
  json members = json::array();
  for (const auto& mem : e.members())
    members.push_back({{"weight", mem.weight},
                       {"coeffs", matrix_json(mem.state.coeffs())}});
  const json doc = {{"kind", "ensemble"},
                    {"m", e.dim_a()},
                    {"n", e.dim_b()},
                    {"members", std::move(members)}};
  return doc.dump(2);
}

std::string to_json_text(const DensityMatrix& rho) {
  const json doc = {{"kind", "density"},
                    {"m", rho.dim_a()},
                    {"n", rho.dim_b()},
                    {"matrix", matrix_json(rho.mat())}};
  return doc.dump(2);
}

std::string report_json(const BoundReport& rep) {
  json doc = {{"schema_version", 1},
              {"kind", "bound_report"},
              {"m", rep.m},
              {"n", rep.n},
              {"r", rep.r},
              {"t", rep.t},
              {"rank_T1", rep.rank_T1},
              {"rank_T2", rep.rank_T2},
              {"dim_LA", rep.dim_LA},
              {"dim_LB", rep.dim_LB},
              {"lower_bound", rep.lower_bound},
              {"member_schmidt_ranks", rep.member_schmidt_ranks},
              {"exact", rep.exact},
              {"tolerance", tolerance_json(rep.tolerance)}};
  if (rep.upper_bound) {
    doc["upper_bound"] = *rep.upper_bound;
    doc["upper_bound_from"] = rep.upper_bound_from;
  } else {
    doc["upper_bound"] = nullptr;
  }
  return doc.dump(2);
}

std::string summary_json(const TrialSummary& s) {
  const json doc = {{"schema_version", 1},
                    {"kind", "trial_summary"},
                    {"config",
                     {{"m", s.config.m},
                      {"n", s.config.n},
                      {"r", s.config.r},
                      {"trials", s.config.trials},
                      {"seed", s.config.seed}}},
                    {"successes", s.successes},
                    {"failures", s.failing_seeds},
                    {"min_observed_bound", s.min_observed_bound},
                    {"required_bound", s.required_bound},
                    {"required_quotient", s.required_quotient},
                    {"t2_full_rank_count", s.t2_full_rank_count}};
  return doc.dump(2);
}

std::string report_text(const BoundReport& rep) {
  std::ostringstream out;
  out << "state: " << rep.m << "x" << rep.n << "  members: " << rep.t << "\n"
      << "rank r: " << rep.r << "\n"
      << "rank T1: " << rep.rank_T1 << "  rank T2: " << rep.rank_T2 << "\n"
      << "dim L_A: " << rep.dim_LA << "  dim L_B: " << rep.dim_LB << "\n"
      << "schmidt number lower bound: " << rep.lower_bound << "\n";
  if (rep.upper_bound)
    out << "schmidt number upper bound: " << *rep.upper_bound << " (from "
        << rep.upper_bound_from << ")\n";
  else
    out << "schmidt number upper bound: none\n";
  out << "exact: " << (rep.exact ? "yes" : "no") << "\n"
      << "tolerance: rank_rel=" << rep.tolerance.rank_rel
      << " zero_abs=" << rep.tolerance.zero_abs << "\n";
  return out.str();
}

std::string summary_text(const TrialSummary& s) {
  std::ostringstream out;
  out << "config: m=" << s.config.m << " n=" << s.config.n << " r=" << s.config.r
      << " trials=" << s.config.trials << " seed=" << s.config.seed << "\n"
      << "required bound: " << s.required_bound
      << " (quotient n/r = " << s.required_quotient << ")\n"
      << "successes: " << s.successes << "/" << s.config.trials << "\n"
      << "min observed bound: " << s.min_observed_bound << "\n"
      << "T2 full rank: " << s.t2_full_rank_count << "/" << s.config.trials << "\n";
  if (!s.failing_seeds.empty()) {
    out << "failing seeds:";
    for (std::uint64_t seed : s.failing_seeds) out << " " << seed;
    out << "\n";
  }
  return out.str();
}

}  // namespace snbound
