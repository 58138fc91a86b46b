#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pairvec {

// Writes to `<path>.tmp` and renames into place on commit(), so a failed
// stage never leaves a half-written artifact at the declared output path.
class AtomicWriter {
 public:
  explicit AtomicWriter(std::filesystem::path path);
  ~AtomicWriter();

  AtomicWriter(const AtomicWriter&) = delete;
  AtomicWriter& operator=(const AtomicWriter&) = delete;

  std::ofstream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

std::vector<std::string> split_ws(std::string_view line);
std::vector<std::string> split_on(std::string_view line, char delim);
std::string trim(std::string_view s);

// Calls fn once per line, newline stripped. Throws DataError if the file
// cannot be opened.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::string_view, size_t /*lineno*/)>& fn);

std::string read_file(const std::filesystem::path& path);

}  // namespace pairvec
