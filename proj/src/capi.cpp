#include "canlift/canlift.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "canlift/json_io.hpp"

namespace {

using namespace canlift;

Word word_from(const Json& j) { return j.get<Word>(); }
Weight weight_from(const Json& j) { return j.get<Weight>(); }
IntVec intvec_from(const Json& j) { return j.get<IntVec>(); }

CartanDatum datum_from(const Json& p) {
  std::string series = p.at("series").get<std::string>();
  if (series.size() != 1) fail(ErrorCode::ParseError, "series must be a single letter");
  return build_cartan(series[0], p.at("rank").get<int>());
}

Json run_words(const Json& p) {
  CartanDatum c = datum_from(p);
  Word w = p.contains("word") ? word_from(p.at("word")) : longest_word(c);
  Json words = Json::array();
  for (const Word& v : all_reduced_words(c, w)) words.push_back(v);
  return Json{{"words", words}};
}

Json run_braid_path(const Json& p) {
  CartanDatum c = datum_from(p);
  auto path = braid_path(c, word_from(p.at("from")), word_from(p.at("to")));
  Json moves = Json::array();
  for (const BraidMove& m : path) moves.push_back(Json{{"pos", m.pos}, {"len", m.len}});
  return Json{{"moves", moves}};
}

Json run_star(const Json& p) {
  CartanDatum c = datum_from(p);
  return Json{{"star", star(c, p.at("i").get<int>())}};
}

Json run_zeta_check(const Json& p) {
  CartanDatum c = datum_from(p);
  RatVec t;
  for (const auto& x : p.at("t")) t.push_back(rat_from_string(x.get<std::string>()));
  return zeta_report_to_json(verify_zeta_formula(c, word_from(p.at("word")), t));
}

Json run_transition(const Json& p) {
  CartanDatum c = datum_from(p);
  Word from = word_from(p.at("from")), to = word_from(p.at("to"));
  IntVec t = intvec_from(p.at("t"));
  std::string side = p.at("side").get<std::string>();
  IntVec out;
  if (side == "lusztig")
    out = transition_lusztig(c, from, to, t);
  else if (side == "string")
    out = transition_string(c, from, to, t);
  else
    fail(ErrorCode::Usage, "side must be 'lusztig' or 'string'");
  return Json{{"t_out", out}};
}

Json run_phi(const Json& p) {
  CartanDatum c = datum_from(p);
  IntVec out = phi_map(c, word_from(p.at("to")), word_from(p.at("from")),
                       weight_from(p.at("lambda")), intvec_from(p.at("t")));
  return Json{{"t_out", out}};
}

Json run_schutz(const Json& p) {
  CartanDatum c = datum_from(p);
  Word w = word_from(p.at("word"));
  AffineMap m = schutz_affine(c, w, weight_from(p.at("lambda")));
  Word starred = w;
  for (auto& i : starred) i = star(c, i);
  Json out{{"word_out", starred}};
  if (p.contains("t")) out["t_out"] = m.apply(intvec_from(p.at("t")));
  else out["map"] = affine_map_to_json(m);
  return out;
}

Json run_anchor(const Json& p) {
  CartanDatum c = datum_from(p);
  return Json{{"l", anchor_constants(c, weight_from(p.at("lambda")), word_from(p.at("word")))}};
}

Json run_crystal_dot(const Json& p) {
  int rank = p.at("rank").get<int>();
  CrystalGraph g = generate_crystal(rank, weight_from(p.at("lambda")));
  return Json{{"dot", crystal_to_dot(g)}};
}

Json run_verify(const Json& p) {
  unsigned seed = p.contains("seed") ? p.at("seed").get<unsigned>() : 42u;
  std::string suite = p.contains("suite") ? p.at("suite").get<std::string>() : "all";
  std::vector<CriterionResult> results;
  if (suite == "all") {
    results = run_acceptance(seed, false);
  } else {
    int id = 0;
    try {
      id = std::stoi(suite);
    } catch (const std::exception&) {
      fail(ErrorCode::Usage, "suite must be 'all' or a criterion id 1..9");
    }
    results.push_back(run_criterion(id, seed));
  }
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  return Json{{"pass", pass}, {"criteria", criteria_to_json(results)}};
}

Json dispatch(const std::string& cmd, const Json& p) {
  if (cmd == "words") return run_words(p);
  if (cmd == "braid-path") return run_braid_path(p);
  if (cmd == "star") return run_star(p);
  if (cmd == "zeta-check") return run_zeta_check(p);
  if (cmd == "transition") return run_transition(p);
  if (cmd == "phi") return run_phi(p);
  if (cmd == "schutz") return run_schutz(p);
  if (cmd == "anchor") return run_anchor(p);
  if (cmd == "crystal-dot") return run_crystal_dot(p);
  if (cmd == "verify") return run_verify(p);
  fail(ErrorCode::Usage, "unknown subcommand: " + cmd);
}

}  // namespace

struct clf_context {
  int code = 0;
  std::string message;
};

extern "C" {

clf_context* clf_context_create(void) { return new clf_context(); }

void clf_context_destroy(clf_context* ctx) { delete ctx; }

int clf_last_error_code(const clf_context* ctx) { return ctx ? ctx->code : -1; }

const char* clf_last_error(const clf_context* ctx) {
  return ctx ? ctx->message.c_str() : "null context";
}

int clf_run(clf_context* ctx, const char* subcommand, const char* params_json,
            char** result_json) {
  if (!ctx) return -1;
  ctx->code = 0;
  ctx->message.clear();
  if (!subcommand || !result_json) {
    ctx->code = (int)canlift::ErrorCode::Usage;
    ctx->message = "null argument";
    return ctx->code;
  }
  *result_json = nullptr;
  try {
    Json params = params_json && *params_json ? Json::parse(params_json)
                                              : Json::object();
    std::string out = dispatch(subcommand, params).dump();
    char* buf = (char*)std::malloc(out.size() + 1);
    if (!buf) {
      ctx->code = (int)canlift::ErrorCode::Internal;
      ctx->message = "out of memory";
      return ctx->code;
    }
    std::memcpy(buf, out.c_str(), out.size() + 1);
    *result_json = buf;
    return 0;
  } catch (const canlift::Error& e) {
    ctx->code = (int)e.code();
    ctx->message = e.what();
  } catch (const Json::exception& e) {
    ctx->code = (int)canlift::ErrorCode::ParseError;
    ctx->message = e.what();
  } catch (const std::exception& e) {
    ctx->code = (int)canlift::ErrorCode::Internal;
    ctx->message = e.what();
  }
  return ctx->code;
}

void clf_string_free(char* s) { std::free(s); }

}  // extern "C"
