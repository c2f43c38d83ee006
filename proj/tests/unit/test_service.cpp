#include <thread>

#include "doctest.h"
#include "httplib.h"

#include "einz/json_io.hpp"
#include "einz/service.hpp"

using namespace einz;

namespace {

const char* kSituation = R"({
  "id": "req-7",
  "decks": 8,
  "mode": "open",
  "hand": [10, 6],
  "opponents": [{"cards_taken": 2, "has_stood": false, "policy": "stand18"}]
})";

}  // namespace

TEST_CASE("evaluate handler") {
  const auto ok = service::evaluate(kSituation);
  REQUIRE(ok.status == 200);
  const auto j = json::parse(ok.body);
  CHECK(j.at("id") == "req-7");
  CHECK(j.at("recommendation") == "stand");
  CHECK(j.at("evaluations").size() == 2);
  for (const auto& e : j.at("evaluations")) {
    const double sum = e.at("win").get<double>() + e.at("tie").get<double>() +
                       e.at("lose").get<double>();
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-5));
  }

  CHECK(service::evaluate("{not json").status == 400);
  CHECK(service::evaluate(R"({"decks": 1})").status == 400);
  CHECK(service::evaluate(R"({"decks": 1, "hand": [11, 11]})").status == 422);
  CHECK(service::evaluate(R"({"decks": 1, "hand": [11, 5], "removed": [11, 5, 11, 11, 11, 11]})")
            .status == 422);
  CHECK(service::evaluate(R"({"decks": 1, "hand": [10, 1]})").status == 400);
}

TEST_CASE("standing query through the evaluate handler") {
  const auto r = service::evaluate(
      R"({"decks": 1, "mode": "dealer", "variant": "v2",
          "standing": [{"cards": 2}, {"cards": 3}]})");
  REQUIRE(r.status == 200);
  const auto j = json::parse(r.body);
  CHECK(j.at("standing").at("tie").get<double>() == 0.0);
}

TEST_CASE("table, rules and health handlers") {
  CHECK(service::table(1, 1).status == 200);
  CHECK(service::table(9, 1).status == 404);
  CHECK(service::table(1, 0).status == 400);
  const auto rules = json::parse(service::rules().body);
  CHECK(rules.at("values").size() == 10);
  CHECK(json::parse(service::health().body).at("status") == "ok");
}

TEST_CASE("live server on an ephemeral port") {
  service::Config cfg;
  cfg.port = 0;
  service::Server server(cfg);
  const int port = server.bind();
  REQUIRE(port > 0);
  std::thread t([&] { server.run(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/health");
  REQUIRE(health);
  CHECK(health->status == 200);

  auto missing = client.Get("/api/v1/tables/9");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto t3 = client.Get("/api/v1/tables/3?decks=1");
  REQUIRE(t3);
  CHECK(t3->status == 200);
  CHECK(json::parse(t3->body).at("table") == 3);

  auto eval = client.Post("/api/v1/evaluate", kSituation, "application/json");
  REQUIRE(eval);
  CHECK(eval->status == 200);

  auto terminal = client.Post("/api/v1/evaluate", R"({"decks": 1, "hand": [11, 11]})",
                              "application/json");
  REQUIRE(terminal);
  CHECK(terminal->status == 422);

  httplib::Headers origin{{"Origin", "http://localhost:5173"}};
  auto cors = client.Get("/health", origin);
  REQUIRE(cors);
  CHECK(cors->get_header_value("Access-Control-Allow-Origin") == "http://localhost:5173");

  // a second server cannot take the same port
  service::Config clash = cfg;
  clash.port = port;
  service::Server other(clash);
  CHECK_THROWS(other.bind());

  server.stop();
  t.join();
}
