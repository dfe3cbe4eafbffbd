#include "qcluster/server.hpp"

#include <atomic>

#include "httplib.h"

namespace qcluster {

namespace {
std::atomic<httplib::Server*> active{nullptr};
}

void serve(Session& session, const std::string& host, int port, const std::function<void(int)>& on_ready) {
    httplib::Server srv;
    auto route = [&session](const httplib::Request& req, httplib::Response& res) {
        Reply r = session.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    srv.Get(R"(/.*)", route);
    srv.Post(R"(/.*)", route);
    int bound = port == 0 ? srv.bind_to_any_port(host) : (srv.bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw InputError("cannot bind " + host + ":" + std::to_string(port));
    active = &srv;
    if (on_ready) on_ready(bound);
    srv.listen_after_bind();
    active = nullptr;
}

void stop_server() {
    if (auto* s = active.load()) s->stop();
}

}  // namespace qcluster
