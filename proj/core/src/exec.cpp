#include "deckhand/util/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

namespace deckhand::util {

std::vector<std::string> split_command_line(const std::string& cmdline) {
  std::vector<std::string> argv;
  std::string current;
  bool in_single = false, in_double = false, have_token = false;
  for (char c : cmdline) {
    if (in_single) {
      if (c == '\'') in_single = false;
      else current += c;
      continue;
    }
    if (in_double) {
      if (c == '"') in_double = false;
      else current += c;
      continue;
    }
    if (c == '\'') {
      in_single = true;
      have_token = true;
    } else if (c == '"') {
      in_double = true;
      have_token = true;
    } else if (c == ' ' || c == '\t') {
      if (have_token) argv.push_back(current);
      current.clear();
      have_token = false;
    } else {
      current += c;
      have_token = true;
    }
  }
  if (have_token) argv.push_back(current);
  return argv;
}

Result<ProcessResult> run_process(const std::vector<std::string>& argv,
                                  const std::filesystem::path& cwd, int timeout_ms,
                                  std::size_t output_cap) {
  if (argv.empty()) return Err("empty command");

  int pipe_fd[2];
  if (pipe(pipe_fd) != 0) return Err("pipe failed");

  const pid_t pid = fork();
  if (pid < 0) {
    close(pipe_fd[0]);
    close(pipe_fd[1]);
    return Err("fork failed");
  }

  if (pid == 0) {
    // Child: combined stdout/stderr into the pipe, cwd = workspace root.
    dup2(pipe_fd[1], STDOUT_FILENO);
    dup2(pipe_fd[1], STDERR_FILENO);
    close(pipe_fd[0]);
    close(pipe_fd[1]);
    if (chdir(cwd.c_str()) != 0) _exit(127);
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    execvp(args[0], args.data());
    _exit(127);
  }

  close(pipe_fd[1]);
  fcntl(pipe_fd[0], F_SETFL, O_NONBLOCK);

  ProcessResult result;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  bool child_done = false;

  while (true) {
    const auto now = std::chrono::steady_clock::now();
    const int wait_ms = child_done ? 0
                        : now >= deadline
                            ? 0
                            : static_cast<int>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                   deadline - now)
                                                   .count());

    pollfd pfd{pipe_fd[0], POLLIN, 0};
    const int rc = poll(&pfd, 1, std::min(wait_ms, 50));
    if (rc > 0 && (pfd.revents & (POLLIN | POLLHUP))) {
      char buf[4096];
      ssize_t n;
      while ((n = read(pipe_fd[0], buf, sizeof(buf))) > 0) {
        if (result.output.size() < output_cap) {
          const std::size_t take =
              std::min(static_cast<std::size_t>(n), output_cap - result.output.size());
          result.output.append(buf, take);
          if (take < static_cast<std::size_t>(n)) result.output_truncated = true;
        } else {
          result.output_truncated = true;
        }
      }
      if (n == 0) {  // EOF: child closed its end
        break;
      }
    }

    int status = 0;
    if (!child_done && waitpid(pid, &status, WNOHANG) == pid) {
      child_done = true;
      result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
      // No writers remain; one final drain empties the pipe.
      char buf[4096];
      ssize_t n;
      while ((n = read(pipe_fd[0], buf, sizeof(buf))) > 0) {
        if (result.output.size() < output_cap) {
          const std::size_t take =
              std::min(static_cast<std::size_t>(n), output_cap - result.output.size());
          result.output.append(buf, take);
          if (take < static_cast<std::size_t>(n)) result.output_truncated = true;
        } else {
          result.output_truncated = true;
        }
      }
      break;
    }

    if (std::chrono::steady_clock::now() >= deadline && !child_done) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      result.timed_out = true;
      result.exit_code = -1;
      break;
    }
  }
  close(pipe_fd[0]);

  if (!child_done && !result.timed_out) {
    int status = 0;
    if (waitpid(pid, &status, 0) == pid)
      result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  }
  if (result.output_truncated) result.output += "\n[output truncated]";
  return result;
}

}  // namespace deckhand::util
