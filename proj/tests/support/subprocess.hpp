#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace montel::testing {

struct RunResult {
    int exitCode = -1;
    std::string stdoutBytes;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

// Runs `command` through the shell, capturing stdout bytes and the exit code.
inline RunResult run_command(const std::string& command, const std::filesystem::path& workDir) {
    const std::filesystem::path outPath = workDir / "stdout.bin";
    const std::string full = command + " > " + outPath.string() + " 2> " +
                             (workDir / "stderr.bin").string();
    int status = std::system(full.c_str());
    RunResult r;
    if (status < 0) throw std::runtime_error("failed to launch: " + command);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.stdoutBytes = read_file(outPath);
    return r;
}

} // namespace montel::testing
