#include <catch_amalgamated.hpp>

#include <atomic>
#include <fstream>
#include <thread>

#include "support.hpp"

using namespace qtwist;
using namespace testsupport;

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("qtwist-cache-test-" + std::to_string(std::random_device{}()));
        fs::remove_all(path);
    }
    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

} // namespace

TEST_CASE("SHA-256 known answers")
{
    CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("Cached results are identical to fresh computations")
{
    TempDir dir;
    io::Cache cache(dir.path);
    const auto a2 = build_cartan("A2");
    int computed = 0;
    for (int t = 0; t < 500; ++t) {
        const auto poly = random_poly<CAMonomial>([&] { return random_ca(a2); }, 4);
        const std::string request = "t=" + std::to_string(t % 50);
        auto compute = [&] {
            ++computed;
            return io::to_json(a2, poly).dump();
        };
        const std::string first = io::cached(&cache, "A2", request, compute);
        const std::string second = io::cached(&cache, "A2", request, compute);
        CHECK(first == second);
        CHECK(io::cached(nullptr, "A2", request, [&] { return first; }) == first);
    }
    // 50 distinct requests, each computed once
    CHECK(computed == 50);
    CHECK(cache.list().size() == 50);
    CHECK(cache.clear() == 50);
    CHECK(cache.list().empty());
}

TEST_CASE("Keys separate versions, data and requests")
{
    TempDir dir;
    io::Cache v1(dir.path, "engine/1"), v2(dir.path, "engine/2");
    CHECK(v1.key("A2", "x") != v2.key("A2", "x"));
    CHECK(v1.key("A2", "x") != v1.key("A3", "x"));
    CHECK(v1.key("A2", "x") != v1.key("A2", "y"));
    CHECK(v1.key("A2", "x") == io::Cache(dir.path, "engine/1").key("A2", "x"));

    const auto k = v1.key("A2", "x");
    v1.put(k, "payload", R"({"op":"test"})");
    CHECK(v1.get(k) == std::string("payload"));
    // an entry written by another engine version is a miss
    io::Cache spoof(dir.path, "engine/2");
    CHECK_FALSE(spoof.get(k));
    const auto info = v1.list();
    REQUIRE(info.size() == 1);
    CHECK(info[0].meta == R"({"op":"test"})");
    CHECK(info[0].length == 7);
    // write-once
    v1.put(k, "other");
    CHECK(v1.get(k) == std::string("payload"));
}

TEST_CASE("Corrupt entries are misses and are logged")
{
    TempDir dir;
    io::Cache cache(dir.path);
    std::vector<std::string> log;
    cache.set_log_sink([&](const std::string& m) { log.push_back(m); });
    const auto k = cache.key("A1", "r");
    cache.put(k, "hello world");
    REQUIRE(cache.get(k));

    {
        std::fstream f(cache.entry_path(k), std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(-1, std::ios::end);
        f.put('X');
    }
    CHECK_FALSE(cache.get(k));
    REQUIRE(log.size() == 1);
    CHECK(log[0].find("digest mismatch") != std::string::npos);

    {
        std::ofstream f(cache.entry_path(k), std::ios::trunc);
        f << "garbage";
    }
    CHECK_FALSE(cache.get(k));
    CHECK(log.size() == 2);

    // a miss recomputes and overwrites the corrupt file
    CHECK(io::cached(&cache, "A1", "r", [] { return std::string("fresh"); }) == "fresh");
    CHECK(cache.get(k) == std::string("fresh"));
}

TEST_CASE("Concurrent writers of the same entry")
{
    TempDir dir;
    io::Cache cache(dir.path);
    const auto k = cache.key("A2", "same");
    std::vector<std::thread> threads;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&] {
            try {
                for (int r = 0; r < 20; ++r) cache.put(k, "identical payload");
            } catch (...) {
                ++failures;
            }
        });
    for (auto& th : threads) th.join();
    CHECK(failures == 0);
    CHECK(cache.get(k) == std::string("identical payload"));
    std::size_t stray = 0;
    for (const auto& de : fs::directory_iterator(dir.path))
        if (de.path().filename().string().rfind(".tmp-", 0) == 0) ++stray;
    CHECK(stray == 0);
}
