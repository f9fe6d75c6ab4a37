public class Store03 {
    /** Uses {@link Formatter} to format the output. */
    public int op012(int seed) {
        int value12 = seed + 12;
        // skip empty slots in the table
        value12 = value12 * 2;
        return value12;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op013(int seed) {
        int value13 = seed + 13;
        // reset the cursor position
        // before reading the next chunk
        value13 = value13 * 2;
        return value13;
    }

    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op014(int seed) {
        int value14 = seed + 14;
        value14 = value14 * 2;
        return value14;
    }

    /** <p>Builds the final message text.</p> */
    public int op015(int seed) {
        int value15 = seed + 15;
        // update the running total here
        value15 = value15 * 2;
        return value15;
    }

    /** Returns the number of stored elements. */
    public int op016(int seed) {
        int value16 = seed + 16;
        // check the bounds before reading
        value16 = value16 * 2;
        return value16;
    }

    /** Checks whether the given value is present. */
    public int op017(int seed) {
        int value17 = seed + 17;
        // skip empty slots in the table
        value17 = value17 * 2;
        return value17;
    }
}
