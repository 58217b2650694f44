#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::path(WIGNER_TEST_TMP) / "cli";

int wigner(const std::string& args) {
    const std::string cmd = std::string(WIGNER_EXE) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write(const std::string& name, const std::string& text) {
    fs::create_directories(kDir);
    const fs::path p = kDir / name;
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* kTunnel = R"({"command":"tunnel","a":-5,"p0":[4,5,6],"omega":1,"hbar":1,"t_max":15,"t_steps":300})";

}  // namespace

TEST(Cli, DeterministicBytesAndCompanionFiles) {
    const auto cfg = write("tunnel.json", kTunnel);
    ASSERT_EQ(wigner("tunnel --config " + cfg.string() + " --out " + (kDir / "a.csv").string() + " --emit-plot"), 0);
    ASSERT_EQ(wigner("tunnel --config " + cfg.string() + " --out " + (kDir / "b.csv").string()), 0);
    EXPECT_EQ(slurp(kDir / "a.csv"), slurp(kDir / "b.csv"));
    EXPECT_EQ(slurp(kDir / "a.summary.csv"), slurp(kDir / "b.summary.csv"));
    EXPECT_TRUE(fs::exists(kDir / "a.plot.txt"));
    EXPECT_FALSE(fs::exists(kDir / "b.plot.txt"));
}

TEST(Cli, ExitCodes) {
    const auto bad = write("bad.json", R"({"command":"tunnel","a":-5,"p0":4,"omega":-1,"hbar":1,"t_max":15,"t_steps":3})");
    EXPECT_EQ(wigner("tunnel --config " + bad.string()), 2);
    EXPECT_EQ(wigner("tunnel --config " + (kDir / "missing.json").string()), 2);
    EXPECT_EQ(wigner("dance"), 2);
    const auto cfg = write("tunnel2.json", kTunnel);
    EXPECT_EQ(wigner("tunnel --config " + cfg.string() + " --emit-plot"), 2);
    EXPECT_EQ(wigner("eigen --config " + cfg.string()), 2);
    // boundary decay fails inside the transform: a numeric/precondition failure
    const auto wide = write("wide.json", R"({"command":"transform","hbar":1,"state":{"type":"coherent","a":0,"p0":0},"x_grid":{"min":-1,"max":1,"count":16},"xi_grid":{"max":1,"count":8}})");
    EXPECT_EQ(wigner("transform --config " + wide.string()), 1);
}

TEST(Cli, GoldenComparison) {
    const auto cfg = write("tunnel3.json", kTunnel);
    const std::string base = "tunnel --config " + cfg.string() + " --out " + (kDir / "g.csv").string();
    EXPECT_EQ(wigner(base + " --golden " + std::string(WIGNER_GOLDEN)), 0);
    std::string text = slurp(WIGNER_GOLDEN);
    const auto pos = text.rfind(',');
    text.insert(pos + 1, "9");  // perturb the last P value
    const auto perturbed = write("perturbed.csv", text);
    EXPECT_EQ(wigner(base + " --golden " + perturbed.string()), 1);
    const auto empty = write("empty.csv", "");
    EXPECT_EQ(wigner(base + " --golden " + empty.string()), 2);
}
