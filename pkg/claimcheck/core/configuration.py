"""claimcheck classes that manage various configurations."""

import os.path
import os
import multiprocessing

# Import project libraries
from claimcheck.core import files
from claimcheck.core import log
from claimcheck.core import general


class _Config:
    """Class gathers all configuration information."""

    def __init__(self):
        """Intialize the class.

        Args:
            None

        Returns:
            None

        """
        # Initialize key variables
        filepath = files.config_filepath()

        # Run on defaults when there is no configuration file
        if bool(filepath) is False or os.path.isfile(filepath) is False:
            self._config_complete = {}
        else:
            self._config_complete = files.read_yaml_file(filepath)
            if isinstance(self._config_complete, dict) is False:
                self._config_complete = {}

    def _section(self, section):
        """Get a section of the configuration.

        Args:
            section: Name of the section

        Returns:
            result: dict of the section, empty if absent

        """
        # Return
        result = self._config_complete.get(section)
        if isinstance(result, dict) is False:
            result = {}
        return result


class ConfigCore(_Config):
    """Class gathers all configuration information."""

    def __init__(self):
        """Intialize the class.

        Args:
            None

        Returns:
            None

        """
        # Instantiate sub class
        _Config.__init__(self)

        # Initialize key variables
        self._config_core = self._section("core")

    def jobs(self):
        """Get the number of worker processes.

        Args:
            None

        Returns:
            result: result

        """
        # Get processes
        try:
            jobs = max(1, int(self._config_core.get("jobs", 1)))
        except (TypeError, ValueError):
            log_message = 'core: "jobs" must be an integer, using 1'
            log.log2warning(1002, log_message)
            jobs = 1

        # Get CPU cores
        cores = multiprocessing.cpu_count()
        desired_max_jobs = max(1, cores - 1)

        # We don't want a value that's too big that the CPU cannot cope
        result = min(jobs, desired_max_jobs)

        # Multiprocessing can be turned off entirely
        if self.multiprocessing() is False:
            result = 1

        # Return
        return result

    def log_directory(self):
        """Determine the log_directory.

        Args:
            None

        Returns:
            result: configured log_directory, None if not configured

        """
        # Get result
        result = self._config_core.get("log_directory")
        if bool(result) is False:
            return None
        result = os.path.abspath(os.path.expanduser(str(result)))

        # Create the directory if not found
        if os.path.isdir(result) is False:
            files.mkdir(result)

        # Check if value exists
        if os.path.isdir(result) is False:
            log_message = (
                f'log_directory: "{result}" '
                "in the configuration file(s) doesn't exist!"
            )
            log.log2die_safe(1003, log_message)

        # Return
        return result

    def log_file(self):
        """Get log_file.

        Args:
            None

        Returns:
            result: result, None if there is no log directory

        """
        # Get new result
        directory = self.log_directory()
        if bool(directory) is False:
            return None
        result = f"{directory}{os.sep}claimcheck.log"

        # Return
        return result

    def log_level(self):
        """Get log_level.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = self._config_core.get("log_level", "warning")

        # Return
        return result

    def multiprocessing(self):
        """Get multiprocessing.

        Args:
            None

        Returns:
            result: result

        """
        # Get result
        result = self._config_core.get("multiprocessing", True)
        result = general.make_bool(result)
        return result
