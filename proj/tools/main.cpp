#include <iostream>
#include <string>
#include <vector>

#include "grweyl/cli.hpp"

namespace {

const char* kUsage = R"(grweyl -- exact computations around the graded Weyl algebra

usage: grweyl <subcommand> [args...] [--json]

ring and symmetries     cmul, capply
graded ideals           ideal-normalize, ideal-member, ideal-op
module catalog          hom-dim, twist, tensor, proj-iso, proj-canon,
                        surjects, generates, ext1
Grothendieck ring       k0-reduce, k0-mul, k0-class, k0-rank
Picard group            pic-compose, pic-invert, pic-act
Weyl algebra            wmul, iota-component, bmul
dictionary              bridge-simple, bridge-functor, picture

Exit codes: 0 success / true, 1 domain error or false, 2 parse error.
)";

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
        std::cout << kUsage;
        return 0;
    }
    grweyl::CliResult r = grweyl::run_command(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
