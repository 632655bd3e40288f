// Runs the full verification battery at its contract tolerances and
// prints one line per criterion. Exit status 0 only when every line is
// a PASS.

#include <eulertop/verify.hpp>

#include <cstdio>

int main() {
    eulertop::VerifyOptions opt;
    auto results = eulertop::verify_all(opt);

    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-28s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
