#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "canlift/canlift.h"

namespace {

using Json = nlohmann::json;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Json int_list(const std::string& s) {
  Json out = Json::array();
  for (const std::string& part : split_commas(s)) {
    try {
      out.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw CLI::ValidationError("expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

Json string_list(const std::string& s) {
  Json out = Json::array();
  for (const std::string& part : split_commas(s)) out.push_back(part);
  return out;
}

// Runs one subcommand through the shared library; returns the process exit code.
int run(const std::string& cmd, const Json& params, bool* pass_out = nullptr) {
  clf_context* ctx = clf_context_create();
  char* result = nullptr;
  int code = clf_run(ctx, cmd.c_str(), params.dump().c_str(), &result);
  int exit_code = 0;
  if (code != 0) {
    std::fprintf(stderr, "error (%d): %s\n", code, clf_last_error(ctx));
    exit_code = 2;
  } else {
    Json out = Json::parse(result);
    if (cmd == "crystal-dot") {
      std::printf("%s\n", out.at("dot").get<std::string>().c_str());
    } else {
      std::printf("%s\n", out.dump().c_str());
    }
    if (pass_out && out.contains("pass")) *pass_out = out.at("pass").get<bool>();
  }
  clf_string_free(result);
  clf_context_destroy(ctx);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometric lifting of canonical-basis parametrizations"};
  app.require_subcommand(1);

  std::string type = "A", lambda, word, from, to, t, side = "lusztig", suite = "all";
  int rank = 2, i = 1;
  unsigned seed = 42;

  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Cartan series letter (A-G)");
    sub->add_option("--rank", rank, "rank")->required();
  };

  auto* words = app.add_subcommand("words", "list all reduced words of an element");
  add_datum(words);
  words->add_option("--word", word, "a word for the element; defaults to w0");

  auto* starc = app.add_subcommand("star", "the involution i -> i*");
  add_datum(starc);
  starc->add_option("--i", i, "letter")->required();

  auto* zeta = app.add_subcommand("zeta-check", "verify the zeta closed form at a point");
  add_datum(zeta);
  zeta->add_option("--word", word, "reduced word of w0")->required();
  zeta->add_option("--t", t, "positive rationals, e.g. 1,2/3,5")->required();

  auto* trans = app.add_subcommand("transition", "tropical parametrization change");
  add_datum(trans);
  trans->add_option("--side", side, "lusztig or string");
  trans->add_option("--from", from, "source reduced word")->required();
  trans->add_option("--to", to, "target reduced word")->required();
  trans->add_option("--t", t, "integer coordinates")->required();

  auto* phi = app.add_subcommand("phi", "tropical Phi_lambda between parametrizations");
  add_datum(phi);
  phi->add_option("--lambda", lambda, "dominant weight")->required();
  phi->add_option("--from", from, "string-side reduced word")->required();
  phi->add_option("--to", to, "Lusztig-side reduced word")->required();
  phi->add_option("--t", t, "string coordinates")->required();

  auto* schutz = app.add_subcommand("schutz", "affine evacuation formula");
  add_datum(schutz);
  schutz->add_option("--lambda", lambda, "dominant weight")->required();
  schutz->add_option("--word", word, "reduced word of w0")->required();
  schutz->add_option("--t", t, "string coordinates; omit to print the map");

  auto* anchor = app.add_subcommand("anchor", "anchor constants l(lambda, word)");
  add_datum(anchor);
  anchor->add_option("--lambda", lambda, "dominant weight")->required();
  anchor->add_option("--word", word, "reduced word of w0")->required();

  auto* dot = app.add_subcommand("crystal-dot", "crystal graph in DOT format");
  add_datum(dot);
  dot->add_option("--lambda", lambda, "dominant weight")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "'all' or a criterion id 1..9");
  verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Json p{{"series", type}, {"rank", rank}};
    if (words->parsed()) {
      if (!word.empty()) p["word"] = int_list(word);
      return run("words", p);
    }
    if (starc->parsed()) {
      p["i"] = i;
      return run("star", p);
    }
    if (zeta->parsed()) {
      p["word"] = int_list(word);
      p["t"] = string_list(t);
      bool pass = false;
      int code = run("zeta-check", p, &pass);
      return code != 0 ? code : (pass ? 0 : 1);
    }
    if (trans->parsed()) {
      p["side"] = side;
      p["from"] = int_list(from);
      p["to"] = int_list(to);
      p["t"] = int_list(t);
      return run("transition", p);
    }
    if (phi->parsed()) {
      p["lambda"] = int_list(lambda);
      p["from"] = int_list(from);
      p["to"] = int_list(to);
      p["t"] = int_list(t);
      return run("phi", p);
    }
    if (schutz->parsed()) {
      p["lambda"] = int_list(lambda);
      p["word"] = int_list(word);
      if (!t.empty()) p["t"] = int_list(t);
      return run("schutz", p);
    }
    if (anchor->parsed()) {
      p["lambda"] = int_list(lambda);
      p["word"] = int_list(word);
      return run("anchor", p);
    }
    if (dot->parsed()) {
      p["lambda"] = int_list(lambda);
      return run("crystal-dot", p);
    }
    if (verify->parsed()) {
      Json vp{{"suite", suite}, {"seed", seed}};
      clf_context* ctx = clf_context_create();
      char* result = nullptr;
      int code = clf_run(ctx, "verify", vp.dump().c_str(), &result);
      if (code != 0) {
        std::fprintf(stderr, "error (%d): %s\n", code, clf_last_error(ctx));
        clf_context_destroy(ctx);
        return 2;
      }
      Json out = Json::parse(result);
      for (const Json& r : out.at("criteria"))
        std::printf("%s criterion %d: %s (%s, %.2fs)\n",
                    r.at("pass").get<bool>() ? "PASS" : "FAIL", r.at("id").get<int>(),
                    r.at("name").get<std::string>().c_str(),
                    r.at("detail").get<std::string>().c_str(),
                    r.at("seconds").get<double>());
      bool pass = out.at("pass").get<bool>();
      clf_string_free(result);
      clf_context_destroy(ctx);
      return pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  }
  return 2;
}
