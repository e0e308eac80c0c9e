// CLI surface tests: golden outputs and the exit-code contract.
// Usage: test_cli <path-to-klr-binary>

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    std::string out;
    int code;
};

RunResult run(const std::string& cmd) {
    std::string full = cmd + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(full.c_str(), "r");
    if (!p) return {"", -1};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {out, WEXITSTATUS(status)};
}

void expect_eq(const std::string& name, const std::string& got, const std::string& want) {
    if (got != want) {
        ++failures;
        std::cerr << "[FAIL] " << name << "\n  got: " << got << "\n want: " << want << "\n";
    }
}

void expect_code(const std::string& name, int got, int want) {
    if (got != want) {
        ++failures;
        std::cerr << "[FAIL] " << name << ": exit " << got << ", expected " << want << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <klr binary>\n";
        return 1;
    }
    std::string klr = argv[1];

    auto r1 = run(klr + " partitions --alpha 1:1,2:1");
    expect_code("partitions exit", r1.code, 0);
    expect_eq("partitions output", r1.out, "(2..2)^1 (1..1)^1\n(1..2)^1\n");

    auto r2 = run(klr + " roots --alpha 1:1,2:1");
    expect_code("roots exit", r2.code, 0);
    expect_eq("roots output", r2.out, "(1..1)\n(1..2)\n(2..2)\n");

    auto r3 = run(klr + " eval --alpha 1:1,2:1 \"s1*s1*e(1,2)\"");
    expect_code("eval exit", r3.code, 0);
    expect_eq("eval output", r3.out, "(1)*y[1,0]*e(1,2) + (-1)*y[0,1]*e(1,2)\n");

    auto r4 = run(klr + " eval --alpha 1:1,2:1 \"y1*(\"");
    expect_code("eval parse error exit", r4.code, 2);

    auto r5 = run(klr + " eval --alpha 1:1,2:1 \"y7*e(1,2)\"");
    expect_code("eval range error exit", r5.code, 2);

    auto r6 = run(klr + " bogus");
    expect_code("unknown subcommand exit", r6.code, 2);

    auto r7 = run(klr + " eval --alpha 1:1,2:1 \"e(1,2)*e(2,1)\"");
    expect_code("orthogonal idempotents exit", r7.code, 0);
    expect_eq("orthogonal idempotents output", r7.out, "0\n");

    auto r8 = run(klr + " eval --alpha 1:2 \"s1*y2*e(1,1)*s1*y2*e(1,1)\"");
    auto r9 = run(klr + " eval --alpha 1:2 \"s1*y2*e(1,1)\"");
    expect_code("e_2 idempotency exit", r8.code, 0);
    expect_eq("e_2 idempotency", r8.out, r9.out);

    auto r10 = run(klr + " dim --alpha 1:2 --cutoff 6");
    expect_code("dim exit", r10.code, 0);
    if (r10.out.find("agreement: yes") == std::string::npos) {
        ++failures;
        std::cerr << "[FAIL] dim output lacks agreement line\n";
    }
    auto r10b = run(klr + " dim --alpha 1:2 --cutoff 6");
    expect_eq("dim output deterministic", r10.out, r10b.out);

    auto r11 = run(klr + " verify --alpha 1:1,2:1 --suite relations --cutoff 4");
    expect_code("verify relations exit", r11.code, 0);

    auto r12 = run(klr + " basis --alpha 1:2 --degree -2 --cellular");
    expect_code("basis cellular exit", r12.code, 0);

    auto r13 = run(klr + " partitions --alpha 1:1,2:1 --json");
    expect_code("partitions json exit", r13.code, 0);
    if (r13.out.find("i_pi") == std::string::npos) {
        ++failures;
        std::cerr << "[FAIL] partitions --json lacks i_pi\n";
    }

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failures\n";
    return 1;
}
