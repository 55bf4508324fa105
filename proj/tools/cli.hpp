#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzyfrac::cli {

/// Runs one command line (without the program name) and returns the exit
/// code: 0 success, 1 usage / parse / validation error, 2 when the result
/// does not exist or an argument leaves the domain of the operation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Catalog entries: const:c, affine:a,b (a + b x), linear_in_x:k (k x),
/// decay:a,b,c,k (a + b exp(-k t) (x + c)), power:beta (t^beta, x ignored),
/// exp:k (exp(k t), x ignored).
std::function<double(double, double)> catalog_function(const std::string& spec);

}  // namespace fuzzyfrac::cli
