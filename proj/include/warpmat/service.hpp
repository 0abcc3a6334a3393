#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

#include "warpmat/puzzle.hpp"

namespace httplib {
class Server;
}

namespace warpmat {

struct PuzzleSession {
    std::string id;
    int c = 0;
    RuleSet rules;
    PuzzleGrid clues;
    PuzzleGrid solution;
    std::chrono::system_clock::time_point created_at;
};

/// Thread-safe in-memory session store. Sessions are immutable once stored
/// and expire `ttl` after creation.
class SessionStore {
public:
    using Clock = std::function<std::chrono::system_clock::time_point()>;

    explicit SessionStore(std::chrono::seconds ttl = std::chrono::hours(24), Clock clock = {});

    /// Assigns a fresh collision-free id and returns it.
    std::string insert(PuzzleSession session);
    std::shared_ptr<const PuzzleSession> find(const std::string& id);
    std::size_t size();
    std::chrono::system_clock::time_point now() const;

private:
    void evict_expired_locked();
    std::string fresh_id_locked();

    std::chrono::seconds ttl_;
    Clock clock_;
    std::mutex mutex_;
    std::mt19937_64 rng_;
    std::unordered_map<std::string, std::shared_ptr<const PuzzleSession>> sessions_;
};

struct HttpResponse {
    int status = 200;
    std::string body;  // JSON
};

/// JSON endpoints of the puzzle service, independent of the HTTP transport:
///   POST /puzzle/new            {knot, rules?, seed?, target_clues?}
///   POST /puzzle/{id}/validate  {cells}
///   POST /puzzle/{id}/hint      {cells}
class PuzzleService {
public:
    explicit PuzzleService(std::shared_ptr<SessionStore> store = std::make_shared<SessionStore>());

    HttpResponse handle(const std::string& method, const std::string& path, const std::string& body) const;

    HttpResponse create(const std::string& body) const;
    HttpResponse validate(const std::string& id, const std::string& body) const;
    HttpResponse hint(const std::string& id, const std::string& body) const;

    SessionStore& store() const { return *store_; }

private:
    std::shared_ptr<SessionStore> store_;
};

/// HTTP transport for PuzzleService. CORS is open to any origin so the
/// browser UI can be hosted separately.
class PuzzleHttpServer {
public:
    explicit PuzzleHttpServer(const PuzzleService& service);
    ~PuzzleHttpServer();
    PuzzleHttpServer(const PuzzleHttpServer&) = delete;
    PuzzleHttpServer& operator=(const PuzzleHttpServer&) = delete;

    /// Port 0 picks a free port. Returns the bound port.
    int bind(const std::string& host, int port);
    /// Serves until stop() is called.
    void run();
    void stop();

private:
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace warpmat
