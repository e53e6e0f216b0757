#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "dimlat/cli/script.hpp"

namespace dimlat::cli {

/// A query that failed at run time. what() names the query's ordinal and line.
class RunError : public std::runtime_error {
  public:
    RunError(std::size_t query_index, Pos pos, const std::string& message);
    [[nodiscard]] std::size_t query_index() const { return index_; }
    [[nodiscard]] Pos pos() const { return pos_; }

  private:
    std::size_t index_;
    Pos pos_;
};

/// Executes the statements in order and writes one "<query> => <result>" line per
/// query. Stops at the first failing query with RunError; lines for earlier
/// queries have already been written.
void run(const Script& script, std::ostream& out);

/// run() into a string.
std::string run_to_string(const Script& script);

} // namespace dimlat::cli
