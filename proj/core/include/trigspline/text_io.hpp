#pragma once

#include <filesystem>
#include <string>

namespace trigspline {

/// Fixed 17-significant-digit decimal rendering; all numeric file output
/// goes through this so repeated runs are byte-identical.
std::string g17(double v);

/// Write via a temp file in the same directory plus rename, so failed runs
/// leave nothing partial behind. Errors carry the destination path.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace trigspline
