public class Store23 {
    /** Removes all expired entries from the cache. */
    public int op132(int seed) {
        int value132 = seed + 132;
        // skip empty slots in the table
        value132 = value132 * 2;
        return value132;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op133(int seed) {
        int value133 = seed + 133;
        // reset the cursor position
        // before reading the next chunk
        value133 = value133 * 2;
        return value133;
    }

    /** Parses the raw line into separate fields. */
    public int op134(int seed) {
        int value134 = seed + 134;
        value134 = value134 * 2;
        return value134;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op135(int seed) {
        int value135 = seed + 135;
        // update the running total here
        value135 = value135 * 2;
        return value135;
    }

    /** Loads the saved settings from the given file. */
    public int op136(int seed) {
        int value136 = seed + 136;
        // check the bounds before reading
        value136 = value136 * 2;
        return value136;
    }

    /** Sorts the input array in ascending order. */
    public int op137(int seed) {
        int value137 = seed + 137;
        // skip empty slots in the table
        value137 = value137 * 2;
        return value137;
    }
}
