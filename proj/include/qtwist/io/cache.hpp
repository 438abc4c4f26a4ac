#pragma once

// Content-addressed on-disk cache. Entries are keyed by SHA-256 of (engine version, datum,
// request) and written once through a temporary file and rename. An entry file is
//
//   qtwist-cache <engine version>
//   key <hex>
//   created <unix seconds>
//   meta <one-line JSON>
//   digest <sha256 of payload>
//   length <bytes>
//   <payload>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

namespace qtwist::io {

inline constexpr std::string_view engine_version = "qtwist-engine/1";

inline std::string sha256_hex(std::string_view data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 15];
    }
    return out;
}

struct CacheEntryInfo {
    std::string key;
    std::int64_t created = 0;
    std::string meta;
    std::size_t length = 0;
};

class Cache {
public:
    using LogSink = std::function<void(const std::string&)>;

    explicit Cache(std::filesystem::path dir, std::string version = std::string(engine_version))
        : m_dir(std::move(dir)), m_version(std::move(version)),
          m_log([](const std::string& msg) { std::cerr << "qtwist: cache: " << msg << '\n'; })
    {
    }

    /// $QCHAR_CACHE_DIR, else $XDG_CACHE_HOME/qtwist, else ~/.cache/qtwist.
    static std::filesystem::path default_dir()
    {
        if (const char* d = std::getenv("QCHAR_CACHE_DIR"); d && *d) return d;
        if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "qtwist";
        if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "qtwist";
        return std::filesystem::temp_directory_path() / "qtwist-cache";
    }

    const std::filesystem::path& dir() const noexcept { return m_dir; }
    const std::string& version() const noexcept { return m_version; }
    void set_log_sink(LogSink sink) { m_log = std::move(sink); }

    std::string key(std::string_view datum, std::string_view request) const
    {
        std::string material = m_version;
        material += '\n';
        material += datum;
        material += '\n';
        material += request;
        return sha256_hex(material);
    }

    std::filesystem::path entry_path(const std::string& key) const { return m_dir / (key + ".entry"); }

    /// Payload of a valid entry; a missing, foreign-version or corrupt entry is a miss.
    std::optional<std::string> get(const std::string& key) const
    {
        const auto path = entry_path(key);
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string why;
        auto parsed = parse_entry(buf.str(), &why);
        if (!parsed) {
            m_log("corrupt entry " + path.string() + ": " + why);
            return std::nullopt;
        }
        if (parsed->version != m_version) return std::nullopt;
        if (parsed->info.key != key) {
            m_log("corrupt entry " + path.string() + ": key mismatch");
            return std::nullopt;
        }
        return std::move(parsed->payload);
    }

    /// Write-once: an existing valid entry is kept as is.
    void put(const std::string& key, std::string_view payload, std::string_view meta = "{}") const
    {
        if (get(key)) return;
        std::filesystem::create_directories(m_dir);
        const auto now = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
        std::ostringstream os;
        os << "qtwist-cache " << m_version << '\n'
           << "key " << key << '\n'
           << "created " << now << '\n'
           << "meta " << one_line(meta) << '\n'
           << "digest " << sha256_hex(payload) << '\n'
           << "length " << payload.size() << '\n'
           << payload;

        thread_local std::mt19937_64 rng(std::random_device{}());
        const auto tmp = m_dir / (".tmp-" + key + "-" + std::to_string(rng()));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            const std::string bytes = os.str();
            out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, entry_path(key), ec);
        if (ec) {
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cannot install cache entry " + entry_path(key).string());
        }
    }

    std::vector<CacheEntryInfo> list() const
    {
        std::vector<CacheEntryInfo> out;
        std::error_code ec;
        if (!std::filesystem::is_directory(m_dir, ec)) return out;
        for (const auto& de : std::filesystem::directory_iterator(m_dir)) {
            if (de.path().extension() != ".entry") continue;
            std::ifstream in(de.path(), std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            if (auto p = parse_entry(buf.str(), nullptr); p && p->version == m_version) out.push_back(p->info);
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
        return out;
    }

    /// Removes entry and temporary files; returns the number removed.
    std::size_t clear() const
    {
        std::size_t n = 0;
        std::error_code ec;
        if (!std::filesystem::is_directory(m_dir, ec)) return 0;
        std::vector<std::filesystem::path> victims;
        for (const auto& de : std::filesystem::directory_iterator(m_dir)) {
            const auto name = de.path().filename().string();
            if (de.path().extension() == ".entry" || name.rfind(".tmp-", 0) == 0) victims.push_back(de.path());
        }
        for (const auto& p : victims) n += std::filesystem::remove(p, ec) ? 1 : 0;
        return n;
    }

private:
    struct Parsed {
        std::string version;
        CacheEntryInfo info;
        std::string payload;
    };

    static std::string one_line(std::string_view s)
    {
        std::string out(s);
        for (auto& c : out)
            if (c == '\n' || c == '\r') c = ' ';
        return out;
    }

    static std::optional<Parsed> parse_entry(const std::string& bytes, std::string* why)
    {
        auto fail = [&](const char* msg) -> std::optional<Parsed> {
            if (why) *why = msg;
            return std::nullopt;
        };
        std::size_t pos = 0;
        auto line = [&](std::string_view tag, std::string& value) {
            const auto nl = bytes.find('\n', pos);
            if (nl == std::string::npos) return false;
            std::string_view l(bytes.data() + pos, nl - pos);
            if (l.substr(0, tag.size()) != tag || l.size() <= tag.size() || l[tag.size()] != ' ') return false;
            value.assign(l.substr(tag.size() + 1));
            pos = nl + 1;
            return true;
        };
        Parsed p;
        std::string created, digest, length;
        if (!line("qtwist-cache", p.version)) return fail("bad header");
        if (!line("key", p.info.key)) return fail("missing key");
        if (!line("created", created)) return fail("missing timestamp");
        if (!line("meta", p.info.meta)) return fail("missing meta");
        if (!line("digest", digest)) return fail("missing digest");
        if (!line("length", length)) return fail("missing length");
        try {
            p.info.created = std::stoll(created);
            p.info.length = static_cast<std::size_t>(std::stoull(length));
        } catch (const std::exception&) {
            return fail("bad number");
        }
        if (bytes.size() - pos != p.info.length) return fail("length mismatch");
        p.payload = bytes.substr(pos);
        if (sha256_hex(p.payload) != digest) return fail("digest mismatch");
        return p;
    }

    std::filesystem::path m_dir;
    std::string m_version;
    LogSink m_log;
};

/// Returns the cached payload for (datum, request), computing and storing it on a miss.
/// With cache == nullptr the computation always runs.
inline std::string cached(const Cache* cache, std::string_view datum, std::string_view request,
                          const std::function<std::string()>& compute, std::string_view meta = "{}")
{
    if (!cache) return compute();
    const std::string k = cache->key(datum, request);
    if (auto hit = cache->get(k)) return *hit;
    std::string payload = compute();
    cache->put(k, payload, meta);
    return payload;
}

} // namespace qtwist::io
