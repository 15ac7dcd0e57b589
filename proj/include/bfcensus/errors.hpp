#pragma once

#include <stdexcept>
#include <string>

namespace bfcensus {

/* Soft resource guard tripped; rerun with the allow-large override. */
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/* Malformed textual function or .fset file. */
class format_error : public std::runtime_error {
public:
  explicit format_error(const std::string& what) : std::runtime_error(what) {}
};

/* A stream claimed sorted produced out-of-order records. */
class order_violation_error : public std::runtime_error {
public:
  explicit order_violation_error(const std::string& what) : std::runtime_error(what) {}
};

/* Inverse binomial transform went negative: the input is not a census. */
class negative_result_error : public std::runtime_error {
public:
  explicit negative_result_error(const std::string& what) : std::runtime_error(what) {}
};

/* A count relation that must hold was violated: a computation bug. */
class inequality_violation_error : public std::runtime_error {
public:
  explicit inequality_violation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bfcensus
