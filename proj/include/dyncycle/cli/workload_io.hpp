#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyncycle/workload.hpp"

namespace dyncycle::cli {

// Malformed input; line is 1-based, 0 when not tied to a line.
class InputError : public std::runtime_error {
  public:
    InputError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// JSON Lines: a header {"n":..,"weights":"nonneg"|"signed","W":..} then one op per line.
Workload read_workload(std::istream& in);
void write_workload(std::ostream& out, const Workload& wl);

// One "s t" pair per line; blank lines and lines starting with '#' are skipped.
std::vector<std::pair<VertexId, VertexId>> read_pairs(std::istream& in, std::size_t n);

// CSV with header query_index,answer.
void write_results(std::ostream& out, const std::vector<std::string>& answers);
std::vector<std::string> read_results(std::istream& in);

} // namespace dyncycle::cli
