#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace einz::service {

struct Reply {
  int status = 200;
  std::string body;
};

/// POST /api/v1/evaluate. 400 malformed, 422 impossible or terminal state.
Reply evaluate(std::string_view body);
/// GET /api/v1/tables/{id}?decks=N. 404 for an unknown id.
Reply table(int id, int decks);
/// GET /api/v1/rules: card values, multiplicities, policies, variants.
Reply rules();
/// GET /health
Reply health();

struct Config {
  std::string bind_address = "127.0.0.1";
  /// 0 binds an ephemeral port.
  int port = 8080;
  /// Origins allowed by CORS; "*" allows any.
  std::vector<std::string> cors_origins{"http://localhost:5173", "http://127.0.0.1:5173"};
  /// Served under "/" when non-empty (built web UI assets).
  std::string static_dir;
  /// Caps concurrent evaluations.
  std::size_t workers = 4;
};

/// Stateless HTTP front end over the handlers above.
class Server {
 public:
  explicit Server(Config config);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the listening socket; throws std::runtime_error when the address
  /// is unavailable. Returns the bound port.
  int bind();
  /// Serves until stop() is called.
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace einz::service
