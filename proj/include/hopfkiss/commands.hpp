#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopfkiss/analysis.hpp"
#include "hopfkiss/render.hpp"

namespace hopfkiss {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
};

/// Expected invariants of a named construction, used by `verify`.
struct TargetExpectation {
    std::string name;
    std::size_t point_count;
    std::uint32_t neighbor_count;
    std::map<ExactScalar, std::uint32_t> point_spectrum;
    /// Per-point neighbors on the own fiber and on each non-antipodal other fiber.
    std::uint32_t own_fiber;
    std::uint32_t per_other_fiber;
    std::uint32_t other_fibers;
};

std::optional<TargetExpectation> expectation_for(const std::string& name);

/// Builds a target ("cell24", "e8", "lambda16") with a method ("hopf", "canonical").
Configuration build_target(const std::string& target, const std::string& method, unsigned workers = 0);

struct CommandIO {
    std::ostream& out;
    std::ostream& err;
    unsigned workers = 0;
};

int cmd_build(const std::string& target, const std::string& method, const std::filesystem::path& out_path,
              const CommandIO& io);
int cmd_verify(const std::filesystem::path& path, const CommandIO& io);
int cmd_compare(const std::filesystem::path& a, const std::filesystem::path& b, const CommandIO& io);
int cmd_render(const std::filesystem::path& path, const RenderSpec& spec, const std::filesystem::path& out_path,
               bool per_frame, const CommandIO& io);
int cmd_export(const std::filesystem::path& path, const std::string& format,
               const std::filesystem::path& out_path, const CommandIO& io);
int cmd_experiment_e5(int fiber_size, const CommandIO& io);

/// Parses argv and dispatches; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfkiss
