#pragma once

#include <functional>
#include <string>

#include "qcluster/session.hpp"

namespace qcluster {

// Serves the session over HTTP until stop_server() is called. port = 0 picks a free port;
// on_ready receives the bound port before requests are accepted.
void serve(Session& session, const std::string& host, int port, const std::function<void(int)>& on_ready = {});
void stop_server();

}  // namespace qcluster
