#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef BARBILIAN_CLI
#  error "BARBILIAN_CLI must name the CLI binary"
#endif

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + BARBILIAN_CLI + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST(Cli, HalfPlaneDistance) {
    const CliRun r = run("--domain halfplane dist --a 0,1 --b 0,2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, R"({"distance": 0.69314718055994529, "sup": 1, "inf": 0.5, "sup_attained": false, )"
                     R"("inf_attained": true, "argmax": {"chart": 0, "t": "-inf", "point": null}, )"
                     R"("argmin": {"chart": 0, "t": 3.6996667370877988e-09, "point": [3.6996667370877988e-09, 0]}})"
                     "\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("--domain disk dist --a 2,0 --b 0,0").code, 2);
    EXPECT_EQ(run("--domain disk axioms --triples 0").code, 1);
    EXPECT_EQ(run("--domain disk dist --a 0,0 --b 0.5,0 --bogus").code, 1);
    EXPECT_EQ(run("--domain torus dist --a 0,0 --b 0.5,0").code, 1);
    EXPECT_EQ(run("--domain disk --max-iters 2 dist --a 0,0 --b 0.5,0").code, 3);
    EXPECT_EQ(run("--domain quadrant lagrange-check --at 1,0 --dir 1,1").code, 2);
    EXPECT_EQ(run("--domain disk").code, 1);
}

TEST(Cli, DiskAndThreeDimensionalDistances) {
    EXPECT_NE(run("--domain disk dist --a 0,0 --b 0.5,0").out.find(R"("distance": 1.0986122886681)"),
              std::string::npos);
    EXPECT_NE(run("--domain parallel_planes --h 2 dist --a 0,0,0 --b 3,4,0").out.find(R"("distance": 5)"),
              std::string::npos);
}

TEST(Cli, AxiomsAreReproducible) {
    const CliRun a = run("--domain quadrant --seed 9 axioms --triples 30");
    const CliRun b = run("--domain quadrant --seed 9 axioms --triples 30");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find(R"("n_samples": 30)"), std::string::npos);
    // The environment seed only applies without an explicit one.
    const CliRun env = run("--domain quadrant axioms --triples 30", "BARBILIAN_SEED=9");
    EXPECT_EQ(env.out, a.out);
    const CliRun flag = run("--domain quadrant --seed 9 axioms --triples 30", "BARBILIAN_SEED=10");
    EXPECT_EQ(flag.out, a.out);
    EXPECT_EQ(run("--domain quadrant axioms --triples 30", "BARBILIAN_SEED=x").code, 1);
}

TEST(Cli, FieldCsv) {
    const CliRun r = run("--domain halfplane field --grid 3 --bbox -1,1,0,2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x,y,m,R_plus,R_minus,lambda,g11,g12,g22\n"
                     "# skipped -1,0\n# skipped 0,0\n# skipped 1,0\n"
                     "-1,1,0,inf,0.5,1,1,0,1\n0,1,0,inf,0.5,1,1,0,1\n1,1,0,inf,0.5,1,1,0,1\n"
                     "-1,2,0,inf,1,0.5,0.25,0,0.25\n0,2,0,inf,1,0.5,0.25,0,0.25\n1,2,0,inf,1,0.5,0.25,0,0.25\n");
    EXPECT_EQ(run("--domain halfplane field --grid 1 --bbox -1,1,0,2").code, 1);
}

TEST(Cli, TangentAndLagrange) {
    EXPECT_EQ(run("--domain quadrant tangent --at 1,1 --slope 0").out,
              R"({"R_plus": 1, "R_minus": 0.5, "center_plus": [1, 2], "center_minus": [1, 0.5], )"
              R"("tangency_plus": [0, 2], "tangency_minus": [1, 0]})"
              "\n");
    EXPECT_EQ(run("--domain quadrant tangent --at 1,1 --slope 0 --dir 1,0").code, 1);
    EXPECT_NE(run("--domain quadrant lagrange-check --at 1,1 --dir 1,1").out.find(R"("symmetric": true)"),
              std::string::npos);
    EXPECT_NE(run("--domain quadrant lagrange-check --at 1,1 --dir 1,0").out.find(R"("symmetric": false)"),
              std::string::npos);
}

TEST(Cli, Curvature) {
    const CliRun r = run("--domain disk curvature --at 0,0");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(R"("kappa": -1.0000)"), std::string::npos);
}

TEST(Cli, ConfigFileWithFlagsWinning) {
    const std::string path = testing::TempDir() + "barbilian_cli_config.json";
    {
        std::ofstream cfg(path);
        cfg << R"({"domain": "disk", "rho": 2, "seed": 4})";
    }
    const CliRun r = run("--config " + path + " dist --a 0,0 --b 1,0");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(R"("distance": 1.0986122886681)"), std::string::npos); // ln 3 with rho 2
    const CliRun flag = run("--config " + path + " --rho 1 dist --a 0,0 --b 0.5,0");
    EXPECT_NE(flag.out.find(R"("distance": 1.0986122886681)"), std::string::npos);
    EXPECT_EQ(run("--config " + path + " --rho 1 dist --a 0,0 --b 1,0").code, 2);
    {
        std::ofstream cfg(path);
        cfg << R"({"domain": "disk", "radius": 2})";
    }
    EXPECT_EQ(run("--config " + path + " dist --a 0,0 --b 0.5,0").code, 1);
    std::remove(path.c_str());
}

TEST(Cli, HelpForEverySubcommand) {
    for (const char* sub : {"dist", "axioms", "field", "curvature", "tangent", "lagrange-check"}) {
        const CliRun r = run(std::string(sub) + " --help");
        EXPECT_EQ(r.code, 0) << sub;
        EXPECT_NE(r.out.find("Usage"), std::string::npos) << sub;
    }
    EXPECT_EQ(run("--version").code, 0);
}
