#include "doctest.h"

#include <string>

#include "json.hpp"

#include "canlift/canlift.h"

namespace {

using Json = nlohmann::json;

Json call(clf_context* ctx, const char* cmd, const Json& params, int expect_code = 0) {
  char* result = nullptr;
  int code = clf_run(ctx, cmd, params.dump().c_str(), &result);
  CHECK(code == expect_code);
  CHECK(code == clf_last_error_code(ctx));
  Json out;
  if (code == 0) {
    REQUIRE(result != nullptr);
    out = Json::parse(result);
  } else {
    CHECK(result == nullptr);
    CHECK(std::string(clf_last_error(ctx)) != "");
  }
  clf_string_free(result);
  return out;
}

}  // namespace

TEST_CASE("c api round trips") {
  clf_context* ctx = clf_context_create();
  REQUIRE(ctx != nullptr);

  SUBCASE("star") {
    Json out = call(ctx, "star", {{"series", "A"}, {"rank", 3}, {"i", 1}});
    CHECK(out.at("star") == 3);
  }
  SUBCASE("words") {
    Json out = call(ctx, "words", {{"series", "A"}, {"rank", 2}});
    CHECK(out.at("words").size() == 2);
  }
  SUBCASE("schutz") {
    Json out = call(ctx, "schutz", {{"series", "A"},
                                    {"rank", 2},
                                    {"lambda", {1, 0}},
                                    {"word", {1, 2, 1}},
                                    {"t", {1, 0, 0}}});
    CHECK(out.at("t_out") == Json::array({0, 0, 1}));
    CHECK(out.at("word_out") == Json::array({2, 1, 2}));
  }
  SUBCASE("transition") {
    Json out = call(ctx, "transition", {{"series", "A"},
                                        {"rank", 2},
                                        {"side", "string"},
                                        {"from", {1, 2, 1}},
                                        {"to", {2, 1, 2}},
                                        {"t", {0, 1, 1}}});
    CHECK(out.at("t_out") == Json::array({1, 1, 0}));
  }
  SUBCASE("zeta-check") {
    Json out = call(ctx, "zeta-check", {{"series", "A"},
                                        {"rank", 2},
                                        {"word", {1, 2, 1}},
                                        {"t", {"1", "2", "3"}}});
    CHECK(out.at("pass") == true);
    CHECK(out.at("t_out") == Json::array({"2/9", "3/2", "1/3"}));
  }
  SUBCASE("crystal-dot") {
    Json out = call(ctx, "crystal-dot", {{"rank", 2}, {"lambda", {1, 0}}});
    CHECK(out.at("dot").get<std::string>().find("digraph") != std::string::npos);
  }
  SUBCASE("errors carry codes and messages") {
    call(ctx, "star", {{"series", "A"}, {"rank", 2}, {"i", 9}}, 2);   // IndexOutOfRange
    call(ctx, "nope", Json::object(), 19);                            // Usage
    call(ctx, "anchor",
         {{"series", "B"}, {"rank", 2}, {"lambda", {1, 0}}, {"word", {1, 2, 1, 2}}},
         22);  // UnsupportedType
    // the context recovers after an error
    Json out = call(ctx, "star", {{"series", "A"}, {"rank", 2}, {"i", 1}});
    CHECK(out.at("star") == 2);
  }
  SUBCASE("null arguments") {
    char* result = nullptr;
    CHECK(clf_run(ctx, nullptr, "{}", &result) != 0);
    CHECK(clf_run(nullptr, "star", "{}", &result) == -1);
  }

  clf_context_destroy(ctx);
}

TEST_CASE("verify single criterion through the c api") {
  clf_context* ctx = clf_context_create();
  Json out = call(ctx, "verify", {{"suite", "8"}, {"seed", 42}});
  CHECK(out.at("pass") == true);
  REQUIRE(out.at("criteria").size() == 1);
  CHECK(out.at("criteria")[0].at("id") == 8);
  clf_context_destroy(ctx);
}
