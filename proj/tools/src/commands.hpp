#pragma once

#include <iosfwd>
#include <string>

namespace manin::cli {

inline constexpr const char* kToolVersion = "manin 0.1.0";

struct CommonOptions {
    int samples = 50;
    unsigned seed = 0;
    double tol = 1e-9;
    bool json_output = false;
};

// Exit codes: 0 all checks pass, 1 check failure (or non-admissible point),
// 2 usage or parse error.
int cmd_validate(const std::string& path, const CommonOptions& opt, std::ostream& out);
int cmd_double(const std::string& path, const std::string& twist_spec,
               const std::string& out_path, const CommonOptions& opt, std::ostream& out);
int cmd_verify(const std::string& path, const std::string& suite, const CommonOptions& opt,
               std::ostream& out);
int cmd_eval(const std::string& path, const std::string& at_spec, const std::string& object_spec,
             const std::string& twist_spec, const CommonOptions& opt, std::ostream& out);

}  // namespace manin::cli
