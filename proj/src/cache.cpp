#include "striphom/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace striphom {

DiskCache::DiskCache(std::optional<std::string> dir) {
    if (dir && !dir->empty()) {
        dir_ = *dir;
    } else if (const char* env = std::getenv("STRIPHOM_CACHE"); env && *env) {
        dir_ = env;
    } else {
        dir_ = "cache";
    }
}

std::filesystem::path DiskCache::file_for(const std::string& key) const {
    for (char c : key)
        if (!(isalnum((unsigned char)c) || c == '-' || c == '_' || c == '.'))
            throw std::invalid_argument("cache key must be a plain token: " + key);
    return dir_ / (key + ".json");
}

std::optional<std::string> DiskCache::get(const std::string& key) const {
    std::ifstream in(file_for(key));
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return body.str();
}

void DiskCache::put(const std::string& key, const std::string& text) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);  // best effort; write reports failure
    static std::mt19937_64 rng{std::random_device{}()};
    std::filesystem::path tmp;
    {
        std::ostringstream name;
        name << ".tmp-" << std::hex << rng() << "-" << key;
        tmp = dir_ / name.str();
    }
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << text;
        if (!out.good()) {
            std::filesystem::remove(tmp, ec);
            return;  // cache is advisory; failure to persist is not an error
        }
    }
    std::filesystem::rename(tmp, file_for(key), ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace striphom
