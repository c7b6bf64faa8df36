#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kingdon {

// Command-line front end. Exit status 0 on success/pass, 1 on verification
// failure (counterexample printed), 2 on usage or parse errors. Output is
// deterministic for a fixed argv and --seed.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Markdown rendering of a structure table; the zero form reproduces the
// alternative exterior algebra table byte for byte.
class Algebra;
std::string table_markdown(const Algebra& a);
std::string table_csv(const Algebra& a);

}  // namespace kingdon
