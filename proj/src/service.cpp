#include "einz/service.hpp"

#include <sys/socket.h>

#include <algorithm>

#include <httplib.h>

#include "einz/errors.hpp"
#include "einz/json_io.hpp"
#include "einz/scenario.hpp"
#include "einz/tables.hpp"

namespace einz::service {

namespace {

constexpr int kApiPrecision = 6;

Reply error_reply(int status, const std::string& message) {
  return {status, json::Json{{"error", message}}.dump()};
}

}  // namespace

Reply evaluate(std::string_view body) {
  try {
    const json::Json request = json::parse(body);
    json::Json response;
    if (json::is_standing_query(request)) {
      const StandingQuery q = json::standing_query_from(request);
      response["engine_version"] = json::engine_version();
      response["computation_mode"] = "marginal";
      response["standing"] = json::to_json(evaluate_standing(q), kApiPrecision);
    } else {
      const ObservedState state = json::observed_state_from(request);
      response = json::evaluation_response(state, evaluate_actions(state), kApiPrecision);
    }
    if (request.is_object() && request.contains("id")) {
      json::Json out;
      out["id"] = request.at("id");
      out.update(response);
      response = std::move(out);
    }
    return {200, response.dump()};
  } catch (const InputError& e) {
    return error_reply(400, e.what());
  } catch (const StateError& e) {
    return error_reply(422, e.what());
  } catch (const std::exception& e) {
    return error_reply(500, e.what());
  }
}

Reply table(int id, int decks) {
  if (id < 1 || id > kTableCount) return error_reply(404, "no table " + std::to_string(id));
  if (decks < 1) return error_reply(400, "decks must be >= 1");
  try {
    OutputSpec spec;
    spec.format = Format::Json;
    spec.precision = kApiPrecision;
    return {200, render(make_table(id, decks), spec)};
  } catch (const std::exception& e) {
    return error_reply(500, e.what());
  }
}

Reply rules() {
  json::Json values = json::Json::array();
  for (PointValue v : all_point_values()) {
    values.push_back({{"value", v.points()}, {"per_deck", per_deck_multiplicity(v)}});
  }
  json::Json j;
  j["engine_version"] = json::engine_version();
  j["values"] = std::move(values);
  json::Json policies = json::Json::array();
  for (int t = 12; t <= 21; ++t) {
    policies.push_back("stand" + std::to_string(t));
    policies.push_back("stand" + std::to_string(t) + "+c14");
  }
  j["policies"] = std::move(policies);
  j["modes"] = {"open", "dealer-v1", "dealer-v2", "dealer-v3"};
  j["computation_modes"] = {"marginal", "conditioned"};
  return {200, j.dump()};
}

Reply health() {
  return {200, json::Json{{"status", "ok"}, {"version", json::engine_version()}}.dump()};
}

struct Server::Impl {
  Config config;
  httplib::Server http;
};

namespace {

bool origin_allowed(const Config& config, const std::string& origin) {
  return std::any_of(config.cors_origins.begin(), config.cors_origins.end(),
                     [&](const std::string& o) { return o == "*" || o == origin; });
}

void send(httplib::Response& res, const Reply& reply) {
  res.status = reply.status;
  res.set_content(reply.body, "application/json");
}

}  // namespace

Server::Server(Config config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  auto& http = impl_->http;
  const Config& cfg = impl_->config;

  // httplib defaults to SO_REUSEPORT, which would let a second server share
  // an occupied port.
  http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  const std::size_t workers = std::max<std::size_t>(cfg.workers, 1);
  http.new_task_queue = [workers] { return new httplib::ThreadPool(workers); };

  http.set_post_routing_handler([&cfg](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && origin_allowed(cfg, origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Vary", "Origin");
    }
  });
  http.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  http.Get("/health", [](const httplib::Request&, httplib::Response& res) { send(res, health()); });
  http.Get("/api/v1/rules", [](const httplib::Request&, httplib::Response& res) {
    send(res, rules());
  });
  http.Get(R"(/api/v1/tables/(\d+))", [](const httplib::Request& req, httplib::Response& res) {
    int decks = 1;
    if (req.has_param("decks")) {
      try {
        decks = std::stoi(req.get_param_value("decks"));
      } catch (const std::exception&) {
        send(res, error_reply(400, "decks must be an integer"));
        return;
      }
    }
    int id = 0;
    try {
      id = std::stoi(req.matches[1].str());
    } catch (const std::exception&) {
      id = -1;
    }
    send(res, table(id, decks));
  });
  http.Post("/api/v1/evaluate", [](const httplib::Request& req, httplib::Response& res) {
    send(res, evaluate(req.body));
  });
  if (!cfg.static_dir.empty() && !http.set_mount_point("/", cfg.static_dir)) {
    throw std::runtime_error("static directory not found: " + cfg.static_dir);
  }
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& http = impl_->http;
  const Config& cfg = impl_->config;
  int port = cfg.port;
  if (port == 0) {
    port = http.bind_to_any_port(cfg.bind_address);
    if (port < 0) throw std::runtime_error("cannot bind " + cfg.bind_address);
  } else if (!http.bind_to_port(cfg.bind_address, port)) {
    throw std::runtime_error("cannot bind " + cfg.bind_address + ":" + std::to_string(port) +
                             " (address in use?)");
  }
  return port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace einz::service
