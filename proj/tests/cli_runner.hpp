#pragma once

// Runs the sqbessel binary through the shell and captures stdout and the exit code.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

struct CliRun {
    int code = -1;
    std::string out;
};

inline CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(SQB_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}
