#pragma once

#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

#include "confdet/search.hpp"

namespace confdet {

/// On-disk configuration document:
///   { "n": 2, "points": [[x,y,z], ...], "tol": 1e-9 }   (tol optional)
struct ConfigFile {
    int n{0};
    std::vector<Vec3> points;
    std::optional<double> tol;

    /// Validates against the wall constraints and returns the configuration.
    Configuration to_configuration() const;
};

ConfigFile parse_config(const nlohmann::json& j);
ConfigFile read_config_file(const std::string& path);

/// FNV-1a 64 digest of a file's bytes, as 16 hex characters.
std::string file_digest(const std::string& path);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json report_to_json(const DeterminantReport& rep);
nlohmann::json spec_to_json(const SampleSpec& spec);
nlohmann::json points_to_json(const std::vector<Vec3>& pts);
nlohmann::json search_report_to_json(const SearchReport& rep);

std::string distribution_name(Distribution d);

/// Per-sample CSV table: header row, UTF-8, LF line endings, 17 significant
/// digits on every float. Columns: index, D, im_residual, cond_hint, then
/// p<k>_x, p<k>_y, p<k>_z for each point.
class SearchCsv {
public:
    SearchCsv(const std::string& path, int n);
    void row(long long index, const Configuration& c, const DeterminantReport& rep);

private:
    std::ofstream out_;
};

void write_text_file(const std::string& path, const std::string& body);

}  // namespace confdet
