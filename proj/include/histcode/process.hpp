#pragma once

#include <cerrno>
#include <cstring>
#include <string>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include "histcode/errors.hpp"

namespace histcode {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a command (no shell) capturing stdout and stderr, optionally in a
// working directory and with extra environment variables. Used for git.
inline ProcessResult run_process(const std::vector<std::string>& argv,
                                 const std::string& cwd = {},
                                 const std::vector<std::pair<std::string, std::string>>& env = {}) {
  if (argv.empty()) throw InvalidArgument("run_process: empty argv");

  int out_pipe[2], err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    throw IoError(std::string("pipe failed: ") + std::strerror(errno));
  }

  const pid_t pid = fork();
  if (pid < 0) throw IoError(std::string("fork failed: ") + std::strerror(errno));

  if (pid == 0) {
    ::close(out_pipe[0]);
    ::close(err_pipe[0]);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    ::close(out_pipe[1]);
    ::close(err_pipe[1]);
    if (!cwd.empty() && chdir(cwd.c_str()) != 0) _exit(127);
    for (const auto& [k, v] : env) setenv(k.c_str(), v.c_str(), 1);
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }

  ::close(out_pipe[1]);
  ::close(err_pipe[1]);

  ProcessResult result;
  struct Stream {
    int fd;
    std::string* sink;
    bool open = true;
  };
  Stream streams[2] = {{out_pipe[0], &result.out}, {err_pipe[0], &result.err}};

  char buf[8192];
  while (streams[0].open || streams[1].open) {
    pollfd fds[2];
    nfds_t nfds = 0;
    for (auto& s : streams) {
      if (s.open) fds[nfds++] = pollfd{s.fd, POLLIN, 0};
    }
    if (poll(fds, nfds, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    nfds_t fi = 0;
    for (auto& s : streams) {
      if (!s.open) continue;
      const pollfd& pf = fds[fi++];
      if (pf.revents & (POLLIN | POLLHUP)) {
        const ssize_t got = read(s.fd, buf, sizeof(buf));
        if (got > 0) {
          s.sink->append(buf, static_cast<std::size_t>(got));
        } else {
          ::close(s.fd);
          s.open = false;
        }
      }
    }
  }

  int status = 0;
  waitpid(pid, &status, 0);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace histcode
