#include "acm/errors.hpp"

namespace acm {

namespace {

std::string p4_message(const std::array<int, 4>& p4) {
    return "graph is not P4-free: induced path " + std::to_string(p4[0]) + "-" +
           std::to_string(p4[1]) + "-" + std::to_string(p4[2]) + "-" + std::to_string(p4[3]);
}

std::string twop3_message(const std::array<int, 6>& w) {
    return "graph is not 2P3-free: induced P3s {" + std::to_string(w[0]) + "," +
           std::to_string(w[1]) + "," + std::to_string(w[2]) + "} and {" + std::to_string(w[3]) +
           "," + std::to_string(w[4]) + "," + std::to_string(w[5]) + "}";
}

}  // namespace

ParseError::ParseError(const std::string& msg, int line_no)
    : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}

NotCographError::NotCographError(const std::array<int, 4>& p4)
    : Error(p4_message(p4)), witness(p4) {}

NotTwoP3FreeError::NotTwoP3FreeError(const std::array<int, 6>& pattern)
    : Error(twop3_message(pattern)), witness(pattern) {}

}  // namespace acm
