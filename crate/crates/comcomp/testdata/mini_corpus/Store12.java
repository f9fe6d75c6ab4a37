public class Store12 {
    /** Creates a new empty buffer with default capacity. Callers must close the stream afterwards. */
    public int op066(int seed) {
        int value66 = seed + 66;
        // check the bounds before reading
        value66 = value66 * 2;
        return value66;
    }

    /** Computes the sum of the two operands. */
    public int op067(int seed) {
        int value67 = seed + 67;
        // skip empty slots in the table
        value67 = value67 * 2;
        return value67;
    }

    /** Removes all expired entries from the cache. */
    public int op068(int seed) {
        int value68 = seed + 68;
        // reset the cursor position
        // before reading the next chunk
        value68 = value68 * 2;
        return value68;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op069(int seed) {
        int value69 = seed + 69;
        value69 = value69 * 2;
        return value69;
    }

    /** Parses the raw line into separate fields. */
    public int op070(int seed) {
        int value70 = seed + 70;
        // update the running total here
        value70 = value70 * 2;
        return value70;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op071(int seed) {
        int value71 = seed + 71;
        // check the bounds before reading
        value71 = value71 * 2;
        return value71;
    }
}
