#include "warpmat/service.hpp"

#include <cstdio>
#include <regex>

#include <httplib.h>
#include <json.hpp>

#include "warpmat/puzzle_io.hpp"

namespace warpmat {

using nlohmann::json;

// -------------------------------------------------------------- SessionStore

SessionStore::SessionStore(std::chrono::seconds ttl, Clock clock)
    : ttl_(ttl), clock_(std::move(clock)), rng_(std::random_device{}()) {}

std::chrono::system_clock::time_point SessionStore::now() const {
    return clock_ ? clock_() : std::chrono::system_clock::now();
}

std::string SessionStore::fresh_id_locked() {
    for (;;) {
        char buf[33];
        std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                      static_cast<unsigned long long>(rng_()));
        std::string id(buf);
        if (!sessions_.contains(id)) return id;
    }
}

void SessionStore::evict_expired_locked() {
    const auto cutoff = now() - ttl_;
    std::erase_if(sessions_, [&](const auto& kv) { return kv.second->created_at < cutoff; });
}

std::string SessionStore::insert(PuzzleSession session) {
    std::lock_guard lock(mutex_);
    evict_expired_locked();
    session.id = fresh_id_locked();
    session.created_at = now();
    auto id = session.id;
    sessions_.emplace(id, std::make_shared<const PuzzleSession>(std::move(session)));
    return id;
}

std::shared_ptr<const PuzzleSession> SessionStore::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    evict_expired_locked();
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() {
    std::lock_guard lock(mutex_);
    evict_expired_locked();
    return sessions_.size();
}

// ------------------------------------------------------------- PuzzleService

namespace {

HttpResponse reply(int status, const json& body) { return HttpResponse{status, body.dump()}; }
HttpResponse error(int status, const std::string& message) { return reply(status, json{{"error", message}}); }

RuleSet rules_from(const json& body) {
    if (!body.contains("rules") || body["rules"].is_null()) return RuleSet{};
    const auto& r = body["rules"];
    if (r.is_string()) return RuleSet::parse(r.get<std::string>());
    std::string joined;
    for (const auto& name : r) {
        if (!joined.empty()) joined += ',';
        joined += name.get<std::string>();
    }
    return RuleSet::parse(joined);
}

/// Client working grid from {"cells": [[...]]}, shaped like the session's.
PuzzleGrid working_grid(const PuzzleSession& session, const json& body) {
    json grid = body;
    if (!grid.contains("c")) grid["c"] = session.c;
    if (grid.at("c").get<int>() != session.c) throw ParseError("grid c does not match the session");
    return grid_from_json(grid);
}

}  // namespace

PuzzleService::PuzzleService(std::shared_ptr<SessionStore> store) : store_(std::move(store)) {}

HttpResponse PuzzleService::create(const std::string& body) const {
    json request;
    RuleSet rules;
    std::optional<Preset> preset;
    std::optional<OrientedKnotDiagram> knot;
    try {
        request = json::parse(body);
        const auto name = request.at("knot").get<std::string>();
        rules = rules_from(request);
        preset = find_preset(name);
        knot = preset ? preset->reference : parse_gauss_code(name);
    } catch (const std::exception& e) {
        return error(400, e.what());
    }

    const bool seeded = request.contains("seed") && !request["seed"].is_null();
    PuzzleSession session;
    session.rules = rules;
    std::string notice;
    try {
        if (preset && !seeded) {
            session.clues = preset->published_grid;
            auto solutions = solve(session.clues, rules, 1);
            if (solutions.empty()) return error(422, "preset grid has no completion under rules " + rules.to_string());
            session.solution = std::move(solutions.front());
        } else {
            const auto seed = seeded ? request["seed"].get<std::uint64_t>() : std::uint64_t{0};
            const int target = request.value("target_clues", 0);
            auto generated = generate(*knot, rules, seed, target);
            session.clues = std::move(generated.clues);
            session.solution = std::move(generated.solution);
            notice = generated.notice;
        }
    } catch (const json::exception& e) {
        return error(400, e.what());
    } catch (const Error& e) {
        return error(422, e.what());
    }
    session.c = session.clues.crossings();

    json out{{"c", session.c}, {"grid", to_json(session.clues)}, {"rules", session.rules.names()}};
    out["session_id"] = store_->insert(std::move(session));
    if (!notice.empty()) out["notice"] = notice;
    return reply(200, out);
}

HttpResponse PuzzleService::validate(const std::string& id, const std::string& body) const {
    const auto session = store_->find(id);
    if (!session) return error(404, "unknown session " + id);
    PuzzleGrid grid;
    try {
        grid = working_grid(*session, json::parse(body));
    } catch (const std::exception& e) {
        return error(400, e.what());
    }
    const auto violations = warpmat::validate(grid, session->rules);
    auto list = json::array();
    for (const auto& v : violations) list.push_back(to_json(v));

    const bool complete = grid.full();
    const bool matches = complete && grid == session->solution;
    const bool full_rules = complete && warpmat::validate(grid, RuleSet::all()).empty();
    const bool solved = complete && violations.empty() && (matches || full_rules);
    return reply(200, json{{"violations", list},
                           {"complete", complete},
                           {"solved", solved},
                           {"matches_solution", matches},
                           {"satisfies_all_rules", full_rules}});
}

HttpResponse PuzzleService::hint(const std::string& id, const std::string& body) const {
    const auto session = store_->find(id);
    if (!session) return error(404, "unknown session " + id);
    PuzzleGrid grid;
    try {
        grid = working_grid(*session, json::parse(body));
    } catch (const std::exception& e) {
        return error(400, e.what());
    }
    const auto cell = most_constrained_empty_cell(grid);
    if (!cell) return error(409, "grid is already complete");
    const auto [r, col] = *cell;
    return reply(200, json{{"row", r}, {"col", col}, {"digit", session->solution.at(r, col)}});
}

HttpResponse PuzzleService::handle(const std::string& method, const std::string& path, const std::string& body) const {
    static const std::regex session_route(R"(^/puzzle/([0-9a-f]+)/(validate|hint)$)");
    if (path == "/puzzle/new") {
        if (method != "POST") return error(405, "use POST");
        return create(body);
    }
    std::smatch m;
    if (std::regex_match(path, m, session_route)) {
        if (method != "POST") return error(405, "use POST");
        return m[2] == "validate" ? validate(m[1], body) : hint(m[1], body);
    }
    return error(404, "no route for " + path);
}

PuzzleHttpServer::PuzzleHttpServer(const PuzzleService& service) : server_(std::make_unique<httplib::Server>()) {
    auto cors = [](httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    };
    server_->Post(R"(/puzzle/.*)", [&service, cors](const httplib::Request& req, httplib::Response& res) {
        const auto out = service.handle(req.method, req.path, req.body);
        res.status = out.status;
        res.set_content(out.body, "application/json");
        cors(res);
    });
    server_->Options(R"(/puzzle/.*)", [cors](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        cors(res);
    });
}

PuzzleHttpServer::~PuzzleHttpServer() = default;

int PuzzleHttpServer::bind(const std::string& host, int port) {
    const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw Error("cannot listen on " + host + ":" + std::to_string(port));
    return bound;
}

void PuzzleHttpServer::run() { server_->listen_after_bind(); }

void PuzzleHttpServer::stop() { server_->stop(); }

}  // namespace warpmat
