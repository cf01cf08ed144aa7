// Copyright 2026 The Eigenlogic Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/// @file server.hpp
/// WebSocket transport for a Session. Everything runs on one io_context
/// thread: reads enqueue frames, the cadence timer ticks the session, and the
/// session's outbox is flushed to per-connection write queues.

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include "eigenlogic/session.hpp"

namespace eigenlogic::server {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

class Server;

class Connection : public std::enable_shared_from_this<Connection> {
  public:
    Connection(tcp::socket socket, Server &server, session::ClientId id)
        : ws_(std::move(socket)), server_(server), id_(id) {}

    void start();
    void send(std::shared_ptr<const std::string> frame);
    /// Drops the TCP connection; pending reads and writes complete with errors.
    void shutdown();
    [[nodiscard]] session::ClientId id() const noexcept { return id_; }

  private:
    void read();
    void write_next();
    void close();

    websocket::stream<beast::tcp_stream> ws_;
    beast::flat_buffer buffer_;
    Server &server_;
    session::ClientId id_;
    std::deque<std::shared_ptr<const std::string>> writes_;
    bool open_ = false;
};

class Server {
  public:
    /// Binds to 127.0.0.1:port (0 picks a free port). rate_hz is the number
    /// of simulated steps, and therefore snapshots, per wall-clock second.
    Server(asio::io_context &io, session::Session &session, std::uint16_t port,
           double rate_hz = 50.0, const std::string &address = "127.0.0.1")
        : io_(io), session_(session), acceptor_(io), timer_(io),
          period_(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
              std::chrono::duration<double>(1.0 / rate_hz))) {
        if (!(rate_hz > 0.0)) {
            throw DomainError("snapshot rate must be positive");
        }
        tcp::endpoint ep(asio::ip::make_address(address), port);
        acceptor_.open(ep.protocol());
        acceptor_.set_option(asio::socket_base::reuse_address(true));
        acceptor_.bind(ep);
        acceptor_.listen();
        session_.take_outbox();
    }

    [[nodiscard]] std::uint16_t port() const { return acceptor_.local_endpoint().port(); }

    void start() {
        accept();
        next_tick_ = std::chrono::steady_clock::now() + period_;
        schedule_tick();
    }

    void stop() {
        beast::error_code ec;
        acceptor_.close(ec);
        timer_.cancel();
        auto open = std::exchange(connections_, {});
        for (auto &[_, c] : open) {
            c->shutdown();
        }
    }

    // Called by connections on the io thread.
    void on_open(const std::shared_ptr<Connection> &c) {
        connections_[c->id()] = c;
        c->send(std::make_shared<const std::string>(session_.connect(c->id())));
    }
    void on_frame(session::ClientId id, std::string frame) {
        session_.submit(id, std::move(frame));
        // Paused sessions still answer promptly.
        asio::post(io_, [this] {
            session_.pump();
            flush();
        });
    }
    void on_close(session::ClientId id) {
        session_.disconnect(id);
        connections_.erase(id);
    }

  private:
    void accept() {
        acceptor_.async_accept([this](beast::error_code ec, tcp::socket socket) {
            if (ec) {
                return;
            }
            auto conn = std::make_shared<Connection>(std::move(socket), *this, ++next_id_);
            conn->start();
            accept();
        });
    }

    void schedule_tick() {
        timer_.expires_at(next_tick_);
        timer_.async_wait([this](beast::error_code ec) {
            if (ec) {
                return;
            }
            session_.tick();
            flush();
            next_tick_ += period_;
            const auto now = std::chrono::steady_clock::now();
            if (next_tick_ < now) {
                next_tick_ = now;
            }
            schedule_tick();
        });
    }

    void flush() {
        for (auto &out : session_.take_outbox()) {
            auto frame = std::make_shared<const std::string>(std::move(out.frame));
            if (out.target == session::kBroadcast) {
                for (auto &[_, c] : connections_) {
                    c->send(frame);
                }
            } else if (auto it = connections_.find(out.target); it != connections_.end()) {
                it->second->send(frame);
            }
        }
    }

    asio::io_context &io_;
    session::Session &session_;
    tcp::acceptor acceptor_;
    asio::steady_timer timer_;
    std::chrono::steady_clock::duration period_;
    std::chrono::steady_clock::time_point next_tick_;
    std::map<session::ClientId, std::shared_ptr<Connection>> connections_;
    session::ClientId next_id_ = session::kBroadcast;
};

inline void Connection::start() {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.text(true);
    ws_.async_accept([self = shared_from_this()](beast::error_code ec) {
        if (ec) {
            return;
        }
        self->open_ = true;
        self->server_.on_open(self);
        self->read();
    });
}

inline void Connection::read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
        if (ec) {
            self->close();
            return;
        }
        std::string frame = beast::buffers_to_string(self->buffer_.data());
        self->buffer_.consume(self->buffer_.size());
        self->server_.on_frame(self->id_, std::move(frame));
        self->read();
    });
}

inline void Connection::send(std::shared_ptr<const std::string> frame) {
    if (!open_) {
        return;
    }
    writes_.push_back(std::move(frame));
    if (writes_.size() == 1) {
        write_next();
    }
}

inline void Connection::write_next() {
    ws_.async_write(asio::buffer(*writes_.front()),
                    [self = shared_from_this()](beast::error_code ec, std::size_t) {
                        if (ec) {
                            self->close();
                            return;
                        }
                        self->writes_.pop_front();
                        if (!self->writes_.empty()) {
                            self->write_next();
                        }
                    });
}

inline void Connection::shutdown() {
    beast::error_code ec;
    beast::get_lowest_layer(ws_).socket().shutdown(tcp::socket::shutdown_both, ec);
    beast::get_lowest_layer(ws_).close();
}

inline void Connection::close() {
    if (!open_) {
        return;
    }
    open_ = false;
    server_.on_close(id_);
}

} // namespace eigenlogic::server
