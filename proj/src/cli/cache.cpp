#include "oddkh/cache.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "oddkh/error.hpp"

namespace oddkh {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_atomically(const fs::path& target, const std::string& value) {
  static std::atomic<unsigned> counter{0};
  const fs::path tmp = target.parent_path() /
                       ("." + target.filename().string() + "." + std::to_string(::getpid()) +
                        "." + std::to_string(counter++) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << value;
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot rename into " + target.string());
  }
}

}  // namespace

ResultCache::ResultCache(fs::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create cache directory " + dir_.string());
  const fs::path stamp = dir_ / "VERSION";
  if (fs::exists(stamp) && slurp(stamp) == version_) return;
  for (const auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() == ".json") fs::remove(e.path(), ec);
  }
  write_atomically(stamp, version_);
}

std::string ResultCache::key(const Diagram& d, const std::string& op,
                             const std::string& options) const {
  return fnv1a_hex(version_ + '\n' + canonical_form(d) + '\n' + d.name + '\n' + op + '\n' +
                   options);
}

fs::path ResultCache::entry(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> ResultCache::get(const std::string& key) const {
  const fs::path p = entry(key);
  if (!fs::exists(p)) return std::nullopt;
  return slurp(p);
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  write_atomically(entry(key), value);
}

}  // namespace oddkh
