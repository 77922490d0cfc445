#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "crn/network.hpp"

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(CRN_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline crn::ReactionNetwork load_network(const std::string& name) {
    return crn::parse_network(read_fixture(name));
}
