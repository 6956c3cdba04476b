/*
   Copyright 2026 The k3w Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Report builders behind the k3verify subcommands. One report per claim.

#ifndef K3W_TOOLS_REPORTS_HPP
#define K3W_TOOLS_REPORTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace k3w::cli {

using nlohmann::json;

struct Report {
    std::string id;       ///< set by verify-all, e.g. "1-discriminant"
    std::string command;
    json inputs = json::object();
    std::string claim;
    json result = json::object();
    bool pass = false;
    double millis = 0;

    json to_json(bool timing) const;
};

/// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SurfaceInput {
    long long epsilon = 0;
    std::optional<std::string> a2, a4, a6;  ///< free-form model over F11 instead of X_eps
};

Report surface_build(const SurfaceInput& in);
Report surface_discriminant(const SurfaceInput& in);
Report surface_census(const SurfaceInput& in);
Report surface_smooth(const SurfaceInput& in);

/// @p epsilon defaults to the one named in the map, else 0.
Report aut_scalar(const std::string& map, std::optional<long long> epsilon);
Report aut_order(const std::string& map);
Report aut_multiplier(const std::string& map);
Report aut_normalizes(const std::string& map, const std::string& target);
Report aut_hermitian(const std::vector<std::string>& alphas);
Report aut_gu2(const std::optional<std::string>& matrix, std::size_t count, std::uint64_t seed);

/// @p file, when set, replaces the named group by a generator file.
Report group_order(const std::string& name, const std::optional<std::string>& file);
Report group_spectrum(const std::string& name, const std::optional<std::string>& file);
Report group_mu(const std::string& name, const std::optional<std::string>& file);

Report classify_orders(bool explain, bool sylow);

Report checks_lattice(const std::optional<std::string>& gram, bool elementary11);
Report checks_var0det(std::optional<long long> m, std::optional<long long> b, long long range);
Report checks_mod11(long long r, const std::vector<long long>& orbits, std::vector<long long> m,
                    std::vector<long long> b, long long s2, const std::string& variant, std::size_t random);

Report count_points(long long epsilon, std::size_t ext, bool allow_large);
Report fixed_points(const std::string& map, std::optional<long long> epsilon, std::size_t ext, bool allow_large);

/// The nine acceptance criteria, in order.
std::vector<Report> verify_all();

}  // namespace k3w::cli

#endif
