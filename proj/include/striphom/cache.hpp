#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace striphom {

// One JSON file per key.  Writes go to a temp file in the same directory
// followed by an atomic rename, so a half-written file is never visible and
// concurrent writers of the same key just race to identical content.
class DiskCache {
public:
    // Directory resolution: explicit argument, else $STRIPHOM_CACHE, else
    // ./cache.  Created on first write.
    explicit DiskCache(std::optional<std::string> dir = std::nullopt);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& text) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::filesystem::path file_for(const std::string& key) const;
};

}  // namespace striphom
