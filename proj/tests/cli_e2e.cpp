// End-to-end checks against the installed binary: exit codes, output files,
// and byte-level determinism across runs and thread counts. Takes the path
// to the qsdc executable as argv[1].

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  if (!ok) ++g_failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

double json_number(const std::string& doc, const std::string& key) {
  const std::string needle = "\"" + key + "\": ";
  const std::size_t pos = doc.find(needle);
  if (pos == std::string::npos) return std::numeric_limits<double>::quiet_NaN();
  return std::strtod(doc.c_str() + pos + needle.size(), nullptr);
}

CommandResult run(const std::string& work_dir, const std::string& cmd) {
  const std::string out_path = work_dir + "/stdout.txt";
  const std::string err_path = work_dir + "/stderr.txt";
  const std::string full = cmd + " >" + out_path + " 2>" + err_path;
  const int status = std::system(full.c_str());
  CommandResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = read_file(out_path);
  res.err = read_file(err_path);
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_e2e <path-to-qsdc>\n";
    return 2;
  }
  const std::string bin = std::string("\"") + argv[1] + "\"";

  char dir_template[] = "/tmp/qsdc-e2e-XXXXXX";
  const char* work = mkdtemp(dir_template);
  if (work == nullptr) {
    std::cerr << "cannot create a scratch directory\n";
    return 2;
  }
  const std::string dir = work;

  {
    const CommandResult res = run(dir, bin + " tables");
    check(res.exit_code == 0, "tables exits 0");
    check(res.out.find("psi-     11     I     psi-") != std::string::npos,
          "tables lists the identity row for psi-");
    const CommandResult again = run(dir, bin + " tables");
    check(res.out == again.out, "tables output is stable");
  }

  {
    const CommandResult res = run(dir, bin + " --help");
    check(res.exit_code == 0, "--help exits 0");
    check(res.out.find("oracle") != std::string::npos,
          "--help mentions the oracle subcommand");
  }

  const std::string campaign =
      " run --message 00011011 --trials 2000 --p 0.1"
      " --eve synchronized-naive --seed 7 --format json --output ";
  {
    const CommandResult a = run(dir, bin + campaign + dir + "/a.json");
    const CommandResult b = run(dir, bin + campaign + dir + "/b.json");
    check(a.exit_code == 0 && b.exit_code == 0, "campaign runs exit 0");
    const std::string ja = read_file(dir + "/a.json");
    const std::string jb = read_file(dir + "/b.json");
    check(!ja.empty(), "campaign writes the output file");
    check(ja == jb, "repeated runs are byte-identical");

    const CommandResult t1 = run(
        dir, "QSDC_SIM_THREADS=1 " + bin + campaign + dir + "/t1.json");
    const CommandResult t5 = run(
        dir, "QSDC_SIM_THREADS=5 " + bin + campaign + dir + "/t5.json");
    check(t1.exit_code == 0 && t5.exit_code == 0,
          "campaign runs exit 0 under pinned thread counts");
    check(read_file(dir + "/t1.json") == ja &&
              read_file(dir + "/t5.json") == ja,
          "results do not depend on the thread count");

    const CommandResult seeded = run(
        dir, bin +
                 " run --message 00011011 --trials 2000 --p 0.1"
                 " --eve synchronized-naive --seed 8 --format json --output " +
                 dir + "/c.json");
    check(seeded.exit_code == 0 && read_file(dir + "/c.json") != ja,
          "a different seed changes the sampled rates");
  }

  {
    const CommandResult res = run(
        dir, bin + " oracle --eve synchronized-bell-aware --p 0.25 --format json");
    check(res.exit_code == 0, "oracle exits 0");
    check(std::abs(json_number(res.out, "exact_block_success") - 0.3125) <=
              1e-12,
          "oracle reports the exact interception rate");
    check(res.out.find("\"paper_claim_block_success\": 0.0625,") !=
              std::string::npos,
          "oracle reports the published claim beside it");
  }

  {
    const CommandResult res = run(dir, bin + " run --message 011");
    check(res.exit_code == 2, "an odd message is a usage error");
    check(res.err.find("error") != std::string::npos,
          "usage errors explain themselves on stderr");
  }
  {
    const CommandResult res = run(dir, bin + " run --message 01 --eve both");
    check(res.exit_code == 2, "an unknown strategy is a usage error");
  }
  {
    const CommandResult res =
        run(dir, bin +
                     " run --message 01 --trials 4 --format json"
                     " --output /nonexistent-dir/out.json");
    check(res.exit_code == 1, "an unwritable output path is a runtime error");
  }

  if (g_failures == 0) {
    std::cout << "all end-to-end checks passed\n";
    return 0;
  }
  std::cout << g_failures << " end-to-end check(s) failed\n";
  return 1;
}
