// Launches `flipctl serve` on a free port and talks to it over HTTP.
// Usage: test_serve <path-to-flipctl>

#define DOCTEST_CONFIG_IMPLEMENT
#define DOCTEST_CONFIG_NO_SHORT_MACRO_NAMES
#include <doctest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <httplib.h>
#include <json.hpp>
#include <thread>

using nlohmann::json;

namespace {

std::string g_flipctl;

// Asks the kernel for an unused port. Racy in principle, fine for a test.
int free_port() {
  const int fd = socket(AF_INET, SOCK_STREAM, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  socklen_t len = sizeof addr;
  int port = -1;
  if (bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) == 0 &&
      getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) == 0)
    port = ntohs(addr.sin_port);
  close(fd);
  return port;
}

class ServerProcess {
 public:
  ServerProcess(int port, const std::string& static_dir) : port_(port) {
    pid_ = fork();
    if (pid_ == 0) {
      const std::string p = std::to_string(port);
      execl(g_flipctl.c_str(), "flipctl", "serve", "--port", p.c_str(), "--static-dir", static_dir.c_str(),
            "--cap", "12", static_cast<char*>(nullptr));
      _exit(127);
    }
  }
  ~ServerProcess() {
    if (pid_ > 0) {
      kill(pid_, SIGTERM);
      waitpid(pid_, nullptr, 0);
    }
  }
  bool wait_ready() const {
    httplib::Client c("127.0.0.1", port_);
    for (int i = 0; i < 100; ++i) {
      if (auto r = c.Get("/healthz"); r && r->status == 200) return true;
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    }
    return false;
  }

 private:
  int port_;
  pid_t pid_ = -1;
};

}  // namespace

DOCTEST_TEST_CASE("round trip over HTTP") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("flip_static_" + std::to_string(getpid()));
  fs::create_directories(dir);
  std::ofstream(dir / "index.html") << "<html>board</html>";

  const int port = free_port();
  DOCTEST_REQUIRE(port > 0);
  ServerProcess server(port, dir.string());
  DOCTEST_REQUIRE(server.wait_ready());

  httplib::Client c("127.0.0.1", port);
  auto classify = c.Post("/api/classify", R"({"graph":{"n":5,"attach":[1,4]},"config":"00001"})", "application/json");
  DOCTEST_REQUIRE(classify);
  DOCTEST_CHECK(classify->status == 200);
  DOCTEST_CHECK(classify->get_header_value("Content-Type") == "application/json");
  const json label = json::parse(classify->body);
  DOCTEST_CHECK(label["side"] == "WHOLE");
  DOCTEST_CHECK(label["weights"] == json({1, 3, 5}));

  auto illegal = c.Post("/api/move", R"({"graph":"n=4 attach=3","config":"0000","vertex":1})", "application/json");
  DOCTEST_REQUIRE(illegal);
  DOCTEST_CHECK(illegal->status == 409);

  auto invalid = c.Get("/api/graph?n=3&attach=");
  DOCTEST_REQUIRE(invalid);
  DOCTEST_CHECK(invalid->status == 422);

  // --cap 12 above: n=13 gets the decision but no witness.
  const std::string zeros(12, '0');
  const json reach_body = {{"graph", "n=13 attach=1,12"}, {"from", "1" + zeros}, {"to", zeros + "1"}};
  auto capped = c.Post("/api/reach", reach_body.dump(), "application/json");
  DOCTEST_REQUIRE(capped);
  DOCTEST_CHECK(capped->status == 413);
  DOCTEST_CHECK(json::parse(capped->body).contains("reachable"));

  auto page = c.Get("/index.html");
  DOCTEST_REQUIRE(page);
  DOCTEST_CHECK(page->status == 200);
  DOCTEST_CHECK(page->body == "<html>board</html>");

  fs::remove_all(dir);
}

int main(int argc, char** argv) {
  if (argc < 2) return 2;
  g_flipctl = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
