#pragma once

#include <optional>
#include <string>

#include "report.hpp"

namespace massey::cli {

Report cohomology_command(const std::string& file, std::optional<int> through);
Report repdim_command(int rank);
Report bianchi_command(const std::string& file);
Report triple_command(const std::string& file, bool vanish);
Report pentagonal_command(const std::string& file, bool canonical, std::optional<int> through);
Report massey4_command(const std::string& file, const std::string& classes, const std::optional<std::string>& times);
Report formality_command(const std::string& file, int conn);
Report p3_command(int rank, int h3, const std::optional<std::string>& out);
Report discrepancy_command(const std::string& fx, const std::string& fy, const std::string& iso);

}  // namespace massey::cli
