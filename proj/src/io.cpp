#include "poslab/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "poslab/errors.hpp"

namespace poslab {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("input is not valid JSON");
  return j;
}

json require(const json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw parse_error(std::string("missing JSON field \"") + field + '"');
  return j.at(field);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(as_int(e, what));
  return out;
}

json subset_json(const KSubset& S) { return json(S.elements()); }

Permutation perm_field(const json& j, const char* field) {
  const json f = require(j, field);
  if (!f.is_string()) throw parse_error(std::string(field) + " must be a one-line string");
  return parse_permutation(f.get<std::string>());
}

}  // namespace

std::string necklace_to_json(const GrassmannNecklace& N) {
  json j;
  j["n"] = N.n;
  j["k"] = N.k;
  json entries = json::array();
  for (const KSubset& I : N.entries) entries.push_back(subset_json(I));
  j["entries"] = std::move(entries);
  return j.dump(2) + '\n';
}

GrassmannNecklace necklace_from_json(const std::string& text) {
  const json j = parse_json(text);
  const int n = as_int(require(j, "n"), "n");
  const json entries = require(j, "entries");
  if (!entries.is_array()) throw parse_error("entries must be an array");
  GrassmannNecklace N;
  N.n = n;
  for (const auto& e : entries)
    N.entries.push_back(KSubset(n, as_int_list(e, "necklace entry")));
  N.k = N.entries.empty() ? 0 : N.entries.front().k();
  if (j.contains("k") && as_int(j.at("k"), "k") != N.k)
    throw invariant_error("declared k disagrees with the entries");
  validate(N);
  return N;
}

std::string interval_to_json(const BruhatInterval& iv) {
  json j;
  j["u"] = to_string(iv.u);
  j["v"] = to_string(iv.v);
  j["k"] = iv.k;
  return j.dump(2) + '\n';
}

BruhatInterval interval_from_json(const std::string& text) {
  const json j = parse_json(text);
  BruhatInterval iv;
  iv.u = perm_field(j, "u");
  iv.v = perm_field(j, "v");
  iv.k = as_int(require(j, "k"), "k");
  validate(iv);
  return iv;
}

std::string bases_to_json(const Positroid& M) {
  json j;
  j["n"] = M.n;
  j["k"] = M.k;
  json bases = json::array();
  for (const KSubset& B : M.bases) bases.push_back(subset_json(B));
  j["bases"] = std::move(bases);
  return j.dump(2) + '\n';
}

Positroid bases_from_json(const std::string& text) {
  const json j = parse_json(text);
  const int n = as_int(require(j, "n"), "n");
  const json list = require(j, "bases");
  if (!list.is_array()) throw parse_error("bases must be an array");
  Positroid M;
  M.n = n;
  for (const auto& e : list) M.bases.push_back(KSubset(n, as_int_list(e, "basis")));
  std::sort(M.bases.begin(), M.bases.end());
  M.bases.erase(std::unique(M.bases.begin(), M.bases.end()), M.bases.end());
  if (M.bases.empty()) throw invariant_error("a matroid needs at least one basis");
  M.k = M.bases.front().k();
  for (const KSubset& B : M.bases)
    if (B.k() != M.k) throw invariant_error("bases of mixed sizes");
  if (j.contains("k") && as_int(j.at("k"), "k") != M.k)
    throw invariant_error("declared k disagrees with the bases");
  return M;
}

RationalMatrix matrix_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_array() || j.empty()) throw parse_error("matrix must be a nonempty array of rows");
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw parse_error("matrix rows must be arrays");
    std::vector<mpq_class> row;
    for (const auto& e : r) {
      if (e.is_number_integer())
        row.emplace_back(e.get<long>());
      else if (e.is_string())
        row.push_back(parse_rational(e.get<std::string>()));
      else
        throw parse_error("matrix entries must be integers or \"p/q\" strings");
    }
    rows.push_back(std::move(row));
  }
  return RationalMatrix(rows);
}

std::string report_to_json(const SmoothnessReport& report,
                           const std::string& criterion, bool certified) {
  json j;
  j["w"] = to_string(report.w);
  j["n"] = report.w.size();
  j["k"] = report.M.k;
  j["criterion"] = criterion;
  j["smooth"] = report.smooth;
  j["codim"] = report.codim;
  j["verdicts"] = {{"degree", report.degree_ok},
                   {"regular", report.regular_ok},
                   {"crossed", report.crossed_ok},
                   {"spirograph", report.spirograph_ok}};
  json bases = json::array();
  for (const KSubset& B : report.M.bases) bases.push_back(subset_json(B));
  j["bases"] = std::move(bases);
  j["johnson_degrees"] = report.johnson_degrees;
  j["tangent_codims"] = report.tangent_codims;
  json sing = json::array();
  for (const KSubset& S : report.singular_points) sing.push_back(subset_json(S));
  j["singular_points"] = std::move(sing);
  if (report.witness) {
    const auto& c = *report.witness;
    j["witness"] = {
        {"members",
         {{c.pair.i, report.w(c.pair.i)}, {c.pair.j, report.w(c.pair.j)}}},
        {"crossing", {c.witness, report.w(c.witness)}}};
  } else {
    j["witness"] = nullptr;
  }
  j["certified"] = certified;
  if (certified) j["jacobian_ranks"] = report.jacobian_ranks;
  return j.dump(2) + '\n';
}

std::string johnson_dot(const JohnsonGraphView& G) {
  std::ostringstream out;
  out << "graph johnson {\n";
  for (const KSubset& B : G.positroid.bases) {
    out << "  \"";
    for (size_t i = 0; i < B.elements().size(); ++i)
      out << (i ? "," : "") << B.elements()[i];
    out << "\";\n";
  }
  auto label = [&](size_t idx) {
    std::ostringstream s;
    const auto& e = G.positroid.bases[idx].elements();
    for (size_t i = 0; i < e.size(); ++i) s << (i ? "," : "") << e[i];
    return s.str();
  };
  for (const auto& [a, b] : G.edges)
    out << "  \"" << label(static_cast<size_t>(a)) << "\" -- \""
        << label(static_cast<size_t>(b)) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string chord_svg(const DecoratedPermutation& w) {
  const int n = w.size();
  const double R = 100.0;
  auto x = [&](int i) {
    return R * std::sin(2 * std::numbers::pi * (i - 1) / n);
  };
  auto y = [&](int i) {
    return -R * std::cos(2 * std::numbers::pi * (i - 1) / n);
  };
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-130 -130 260 260\">\n"
      << "  <defs>\n"
      << "    <marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n"
      << "      <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n"
      << "  <circle class=\"boundary\" r=\"" << R
      << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
  for (int i = 1; i <= n; ++i) {
    out << "  <circle class=\"vertex\" cx=\"" << x(i) << "\" cy=\"" << y(i)
        << "\" r=\"2.5\"/>\n"
        << "  <text x=\"" << 1.12 * x(i) << "\" y=\"" << 1.12 * y(i)
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << i
        << "</text>\n";
  }
  for (int i = 1; i <= n; ++i) {
    if (w.is_loop(i)) {
      // small circle tangent to the boundary; sweep encodes the decoration
      const double cx = 0.92 * x(i), cy = 0.92 * y(i);
      out << "  <path class=\"loop " << (w.is_clockwise_loop(i) ? "cw" : "ccw")
          << "\" d=\"M " << cx - 6 << ' ' << cy << " a 6 6 0 1 "
          << (w.is_clockwise_loop(i) ? 1 : 0) << " 12 0 a 6 6 0 1 "
          << (w.is_clockwise_loop(i) ? 1 : 0) << " -12 0\" fill=\"none\" "
             "stroke=\"black\" marker-end=\"url(#tip)\"/>\n";
    } else {
      out << "  <path class=\"arc\" d=\"M " << x(i) << ' ' << y(i)
          << " Q 0 0 " << x(w(i)) << ' ' << y(w(i))
          << "\" fill=\"none\" stroke=\"black\" marker-end=\"url(#tip)\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace poslab
