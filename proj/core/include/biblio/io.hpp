#ifndef BIBLIO_IO_HPP
#define BIBLIO_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace biblio {

std::string read_file(const std::filesystem::path& file);

// Creates parent directories as needed.
void write_file(const std::filesystem::path& file, std::string_view content);

}  // namespace biblio

#endif  // BIBLIO_IO_HPP
