public class Store11 {
    /** Uses {@link Formatter} to format the output. */
    public int op060(int seed) {
        int value60 = seed + 60;
        // update the running total here
        value60 = value60 * 2;
        return value60;
    }

    /** Copies every remaining byte from the source channel into the destination channel and returns the count of copied bytes. */
    public int op061(int seed) {
        int value61 = seed + 61;
        // check the bounds before reading
        value61 = value61 * 2;
        return value61;
    }

    /** Scans the whole token stream once and records where each marker begins so that later lookups stay cheap. */
    public int op062(int seed) {
        int value62 = seed + 62;
        // skip empty slots in the table
        value62 = value62 * 2;
        return value62;
    }

    /** <p>Builds the final message text.</p> */
    public int op063(int seed) {
        int value63 = seed + 63;
        // reset the cursor position
        // before reading the next chunk
        value63 = value63 * 2;
        return value63;
    }

    /** Returns the number of stored elements. */
    public int op064(int seed) {
        int value64 = seed + 64;
        value64 = value64 * 2;
        return value64;
    }

    /** Checks whether the given value is present. */
    public int op065(int seed) {
        int value65 = seed + 65;
        // update the running total here
        value65 = value65 * 2;
        return value65;
    }
}
