#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "ga/verify.hpp"

namespace {

// seconds allowed per criterion, indexed by id
constexpr std::array<double, 14> kLimit{0, 1, 1, 1, 30, 10, 30, 60, 10, 30, 60, 120, 120, 240};

std::string capture(const std::string& cmd, int* status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  *status = pclose(p);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = GA_DEFAULT_CLI;  // overridden by a path argument
  ga::VerifyOptions opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--extended")
      opt.extended = true;
    else
      cli = a;
  }
  int failed = 0;
  auto line = [&](int id, const std::string& name, bool pass, double secs, const std::string& detail) {
    bool in_time = secs <= kLimit[id] * (opt.extended && (id == 4 || id == 7) ? 10 : 1);
    bool ok = pass && in_time;
    failed += !ok;
    std::printf("%s criterion %d (%s) %.2fs%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs,
                in_time ? "" : " over time limit", detail.empty() ? "" : (": " + detail).c_str());
  };
  for (int id = 1; id <= ga::kLibraryCriteria; ++id) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = ga::check_criterion(id, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(id, r.name, r.pass, secs, r.detail);
  }
  if (cli.empty()) {
    line(13, "determinism", false, 0, "no CLI path given");
  } else {
    auto t0 = std::chrono::steady_clock::now();
    int s1 = 0, s2 = 0;
    std::string cmd = "\"" + cli + "\" verify --quick --rng-seed 7";
    std::string a = capture(cmd, &s1), b = capture(cmd, &s2);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool same = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    line(13, "determinism", same, secs, same ? std::to_string(a.size()) + " identical bytes" : "reports differ or failed");
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
