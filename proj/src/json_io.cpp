#include "canlift/json_io.hpp"

#include <sstream>

namespace canlift {

Json cartan_to_json(const CartanDatum& c) {
  Json rows = Json::array();
  for (int i = 1; i <= c.rank; ++i) {
    Json row = Json::array();
    for (int j = 1; j <= c.rank; ++j) row.push_back(c.a(i, j));
    rows.push_back(row);
  }
  return Json{{"series", std::string(1, c.series)}, {"rank", c.rank}, {"matrix", rows}};
}

CartanDatum cartan_from_json(const Json& j) {
  std::string series = j.at("series").get<std::string>();
  if (series.size() != 1) fail(ErrorCode::ParseError, "series must be a single letter");
  return build_cartan(series[0], j.at("rank").get<int>());
}

Json matrix_to_json(const GroupMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) {
      std::ostringstream os;
      os << m.at(r, c);
      row.push_back(os.str());
    }
    rows.push_back(row);
  }
  return rows;
}

GroupMatrix matrix_from_json(const Json& j) {
  int dim = (int)j.size();
  GroupMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    if ((int)j.at(r).size() != dim) fail(ErrorCode::ParseError, "matrix not square");
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = rat_from_string(j.at(r).at(c).get<std::string>());
  }
  return m;
}

namespace {

Json trop_poly_to_json(const TropPoly& p) {
  Json out = Json::array();
  for (const AffineForm& f : p) {
    Json row = Json::array();
    for (long long a : f.a) row.push_back(a);
    row.push_back(f.c);
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json pl_component_to_json(const PLComponent& comp) {
  return Json{{"pos", trop_poly_to_json(comp.pos)}, {"neg", trop_poly_to_json(comp.neg)}};
}

Json pl_map_to_json(const PLMap& map) {
  Json comps = Json::array();
  for (const PLComponent& c : map.components) comps.push_back(pl_component_to_json(c));
  return Json{{"arity", map.arity}, {"components", comps}};
}

Json zeta_report_to_json(const ZetaReport& rep) {
  Json out{{"pass", rep.pass}, {"word", rep.word}};
  Json in = Json::array(), pred = Json::array();
  for (const Rat& x : rep.input) {
    std::ostringstream os;
    os << x;
    in.push_back(os.str());
  }
  for (const Rat& x : rep.predicted) {
    std::ostringstream os;
    os << x;
    pred.push_back(os.str());
  }
  out["t"] = in;
  out["t_out"] = pred;
  if (!rep.pass) {
    out["lhs"] = matrix_to_json(rep.lhs);
    out["rhs"] = matrix_to_json(rep.rhs);
  }
  return out;
}

Json affine_map_to_json(const AffineMap& m) {
  return Json{{"l", m.l}, {"m", m.m}};
}

Json corollary_report_to_json(const CorollaryReport& rep) {
  Json table = Json::array();
  for (const CorollaryRow& row : rep.table) {
    Json b = Json::array();
    for (const auto& r : row.b.rows) b.push_back(r);
    table.push_back(Json{{"b", b}, {"t", row.t}, {"t_out", row.tprime}});
  }
  return Json{{"pass", rep.pass}, {"failures", rep.failures}, {"table", table}};
}

Json condition_report_to_json(const ConditionReport& rep) {
  return Json{{"pass", rep.pass}, {"failures", rep.failures}};
}

Json criteria_to_json(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const CriterionResult& r : results)
    out.push_back(Json{{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
  return out;
}

}  // namespace canlift
