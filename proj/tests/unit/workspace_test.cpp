#include <doctest.h>

#include <random>

#include "../support/fixtures.hpp"
#include "deckhand/tools/workspace.hpp"

using namespace deckhand;
using tools::Workspace;

TEST_SUITE("workspace") {
  TEST_CASE("traversal and absolute paths are rejected") {
    fixtures::TempDir dir{"ws"};
    Workspace ws(dir.path());
    for (const char* bad : {"../../etc/hosts", "/etc/hosts", "~root/x", "a/../../outside",
                            "..", "../sibling"}) {
      auto r = ws.resolve(bad);
      REQUIRE_FALSE(r.ok());
      CHECK(r.error().message.find("outside workspace") != std::string::npos);
    }
  }

  TEST_CASE("benign relative paths resolve under the root") {
    fixtures::TempDir dir{"ws"};
    Workspace ws(dir.path());
    for (const char* good : {"a.txt", "assets/img.png", "a/../b.txt", "./x/y"}) {
      auto r = ws.resolve(good);
      REQUIRE(r.ok());
      CHECK(r.value().string().rfind(ws.root().string(), 0) == 0);
    }
  }

  TEST_CASE("write then read returns the exact bytes") {
    fixtures::TempDir dir{"ws"};
    Workspace ws(dir.path());
    const std::string exact("line1\nline2\r\n\0bin", 17);
    REQUIRE(ws.write_text("sub/dir/file.bin", exact).ok());
    auto back = ws.read_text("sub/dir/file.bin");
    REQUIRE(back.ok());
    CHECK(back.value() == exact);
  }

  TEST_CASE("symlinks cannot escape the sandbox") {
    fixtures::TempDir outside{"ws_outside"};
    fixtures::TempDir dir{"ws_link"};
    fixtures::write_file(outside.path() / "secret.txt", "secret");
    std::filesystem::create_directory_symlink(outside.path(), dir.path() / "escape");
    Workspace ws(dir.path());
    auto r = ws.resolve("escape/secret.txt");
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().message.find("outside workspace") != std::string::npos);
  }

  TEST_CASE("file size limit is enforced") {
    fixtures::TempDir dir{"ws"};
    tools::SandboxPolicy policy;
    policy.max_file_bytes = 16;
    Workspace ws(dir.path(), policy);
    CHECK_FALSE(ws.write_text("big.txt", std::string(17, 'x')).ok());
    CHECK(ws.write_text("ok.txt", std::string(16, 'x')).ok());
  }

  TEST_CASE("adversarial path property: resolution never leaves the root") {
    fixtures::TempDir dir{"ws_prop"};
    Workspace ws(dir.path());
    const std::vector<std::string> segments{"..",     "a",  "assets", ".",   "x1",
                                            "../..",  "~",  "deep",   "b.c", ""};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      std::string path;
      const int parts = 1 + static_cast<int>(rng() % 6);
      for (int p = 0; p < parts; ++p) {
        if (p > 0) path += "/";
        path += segments[rng() % segments.size()];
      }
      if (rng() % 8 == 0) path = "/" + path;
      auto r = ws.resolve(path);
      if (r.ok()) {
        const auto normal = r.value().lexically_normal().string();
        CHECK(normal.rfind(ws.root().string(), 0) == 0);
      }
    }
  }
}
