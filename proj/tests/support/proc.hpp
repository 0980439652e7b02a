#ifndef CO2CAST_TESTS_PROC_HPP
#define CO2CAST_TESTS_PROC_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif

// Minimal subprocess runner for CLI tests: shells out, captures exit code,
// stdout and stderr through temp files.
namespace proc {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string read_all(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

inline Result run(const std::string& command) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    static int counter = 0;
    const std::string tag = std::to_string(++counter) + "_" + std::to_string(::getpid());
    const fs::path out_file = dir / ("co2cast_test_out_" + tag);
    const fs::path err_file = dir / ("co2cast_test_err_" + tag);

    const std::string full =
        command + " >" + out_file.string() + " 2>" + err_file.string();
    const int status = std::system(full.c_str());

    Result result;
    result.out = read_all(out_file);
    result.err = read_all(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
#ifdef _WIN32
    result.exit_code = status;
#else
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    return result;
}

} // namespace proc

#endif
